// Copyright 2026 The ifscrypt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ifscrypt_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "ifscrypt/analysis.hpp"
#include "ifscrypt/auth.hpp"
#include "ifscrypt/serialize.hpp"

namespace ifscrypt::cli {

namespace {

struct Options {
  std::string system, pub, sec, out_pub, out_sec, out;
  std::string alice_pub, alice_sec, bob_pub, bob_sec;
  std::string message, text, cryptogram, tamper, format = "text";
  std::optional<std::size_t> n, m;
  std::optional<std::string> p, a, b;
  std::optional<std::uint64_t> seed;
  std::size_t max_len = 0;
  std::size_t min_len = 1;
  std::uint64_t budget = std::uint64_t{1} << 26;
  unsigned jobs = 0;
  bool fixed_length = false;
  bool lenient_conjugator = false;
  bool with_length = false;
  bool as_text = false;
  bool text_given = false;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kTamperedOrCorrupt:
    case ErrorKind::kRejectChallenge:
    case ErrorKind::kBudgetExceeded:
    case ErrorKind::kEmptyMessage:
      return kExitCryptoFailure;
    default:
      return kExitUsage;
  }
}

Rng make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return Rng(*seed);
  std::random_device rd;
  return Rng((std::uint64_t{rd()} << 32) | rd());
}

bool is_json(const Options& o) { return o.format == "json"; }

// A cryptogram argument names a file when one exists, else it is the literal.
std::string read_cryptogram_arg(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

FieldElement parse_affine_cryptogram(const std::string& arg, const Integer& p) {
  std::string text = trim(read_cryptogram_arg(arg));
  if (!text.empty() && text.front() == '"') text = Json::parse(text).get<std::string>();
  const Integer c = parse_integer(text);
  if (c < 0 || c >= p) throw Error(ErrorKind::kParseError, "cryptogram must lie in [0, p)");
  return FieldElement(c, p);
}

ModMatrix parse_proj_cryptogram(const std::string& arg, std::size_t dim, const Integer& p) {
  const std::string text = read_cryptogram_arg(arg);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParseError, std::string("cryptogram: ") + e.what());
  }
  return mod_matrix_from_json(j, dim, p);
}

Word read_message(const Options& o, unsigned nu) {
  if (o.text_given) return text_to_word(o.text, nu);
  return Word::parse(o.message, nu);
}

void write_output(const Options& o, std::ostream& out, const std::string& payload) {
  if (o.out.empty()) {
    out << payload << "\n";
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorKind::kParseError, "cannot write " + o.out);
  file << payload << "\n";
}

std::string map_str(const FieldAffineMap& g) {
  return to_string(g.slope.value()) + "x + " + to_string(g.intercept.value());
}

// keygen-affine -------------------------------------------------------------

int cmd_keygen_affine(const Options& o, std::ostream& out, std::ostream& err) {
  const SystemFile parsed = system_from_json(read_json_file(o.system));
  const auto* sys = std::get_if<AffineSystem>(&parsed);
  if (!sys) throw Error(ErrorKind::kInvalidParameter, o.system + " describes a projective system");
  const auto n = o.n ? o.n : sys->n;
  if (!n) throw Error(ErrorKind::kInvalidParameter, "--n is required when the system file has no \"n\"");

  AffineKeygenOptions options;
  options.mode = o.fixed_length ? AffineMode::kFixedLength : sys->mode.value_or(AffineMode::kPadded);
  options.strict_conjugator = !o.lenient_conjugator;

  std::optional<ExplicitAffineParams> params = sys->params;
  if (o.p || o.a || o.b) {
    if (!(o.p && o.a && o.b)) throw Error(ErrorKind::kInvalidParameter, "--p, --a and --b go together");
    params = ExplicitAffineParams{parse_integer(*o.p), parse_integer(*o.a), parse_integer(*o.b)};
  }

  AffineKeyPair keys;
  if (params) {
    keys = affine_keygen(sys->f, sys->sep, *n, *params, options);
  } else {
    Rng rng = make_rng(o.seed);
    keys = affine_keygen(sys->f, sys->sep, *n, rng, options);
  }
  write_json_file(o.out_pub, to_json(keys.pub));
  write_json_file(o.out_sec, to_json(keys));
  out << "affine key: n = " << keys.pub.n << ", nu = " << keys.pub.nu << ", p = " << to_string(keys.pub.p)
      << ", mode = " << (keys.pub.mode == AffineMode::kPadded ? "padded" : "fixed-length") << "\n";
  for (std::size_t j = 0; j < keys.pub.g.size(); ++j) out << "  g_" << j << "(x) = " << map_str(keys.pub.g[j]) << "\n";
  out << "  gamma = " << to_string(keys.pub.gamma.value()) << "\n";
  (void)err;
  return kExitOk;
}

// keygen-proj ---------------------------------------------------------------

int cmd_keygen_proj(const Options& o, std::ostream& out, std::ostream& err) {
  const SystemFile parsed = system_from_json(read_json_file(o.system));
  const auto* sys = std::get_if<ProjSystem>(&parsed);
  if (!sys) throw Error(ErrorKind::kInvalidParameter, o.system + " describes an affine system");
  const auto n = o.n ? o.n : sys->n;
  if (!n) throw Error(ErrorKind::kInvalidParameter, "--n is required when the system file has no \"n\"");

  Rng rng = make_rng(o.seed);
  const std::optional<Integer> p = o.p ? std::optional<Integer>(parse_integer(*o.p)) : sys->p;
  ProjKeyPair keys;
  if (p) {
    const IntMatrix u = sys->u ? *sys->u : random_conjugator(sys->a.front().dim(), *p, rng);
    keys = proj_keygen(sys->a, sys->sep, *n, *p, u);
  } else {
    keys = proj_keygen(sys->a, sys->sep, *n, rng);
  }
  for (const auto& w : keys.warnings) err << "warning: " << w << "\n";
  write_json_file(o.out_pub, to_json(keys.pub));
  write_json_file(o.out_sec, to_json(keys));
  out << "projective key: n = " << keys.pub.n << ", nu = " << keys.pub.nu << ", dim = " << keys.pub.dim
      << ", p = " << to_string(keys.pub.p) << "\n";
  return kExitOk;
}

// encrypt / decrypt -----------------------------------------------------------

int cmd_encrypt(const Options& o, std::ostream& out) {
  const Json key = read_json_file(o.pub);
  if (scheme_of(key) == "affine") {
    if (o.with_length) throw Error(ErrorKind::kInvalidParameter, "--with-length applies to projective keys");
    const AffinePublicKey pk = affine_public_from_json(key);
    write_output(o, out, to_string(encrypt(pk, read_message(o, pk.nu)).value()));
  } else {
    const ProjPublicKey pk = proj_public_from_json(key);
    write_output(o, out, to_json(encrypt(pk, read_message(o, pk.nu), o.with_length)).dump());
  }
  return kExitOk;
}

int cmd_decrypt(const Options& o, std::ostream& out) {
  const Json key = read_json_file(o.sec);
  Word w(2);
  if (scheme_of(key) == "affine") {
    if (o.with_length) throw Error(ErrorKind::kInvalidParameter, "--with-length applies to projective keys");
    const AffineSecretKey sk = affine_secret_from_json(key);
    w = decrypt(sk, parse_affine_cryptogram(o.cryptogram, sk.p));
  } else {
    const ProjSecretKey sk = proj_secret_from_json(key);
    w = decrypt(sk, parse_proj_cryptogram(o.cryptogram, sk.dim, sk.p), o.with_length);
  }
  write_output(o, out, o.as_text ? word_to_text(w) : w.str());
  return kExitOk;
}

// auth-demo -----------------------------------------------------------------

struct Tamper {
  enum class Where { kNone, kPreMult, kPostMult, kChalPre, kChalPost } where = Where::kNone;
  std::size_t index = 0;
};

Tamper parse_tamper(const std::string& text, std::size_t nu) {
  if (text.empty()) return {};
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::kParseError, "--tamper expects <kind>:<j>");
  const std::string kind = text.substr(0, colon);
  Tamper t;
  if (kind == "pre-mult") t.where = Tamper::Where::kPreMult;
  else if (kind == "post-mult") t.where = Tamper::Where::kPostMult;
  else if (kind == "chal-pre") t.where = Tamper::Where::kChalPre;
  else if (kind == "chal-post") t.where = Tamper::Where::kChalPost;
  else throw Error(ErrorKind::kParseError, "unknown tamper kind '" + kind + "'");
  const Integer j = parse_integer(text.substr(colon + 1));
  if (j < 0 || j >= nu) throw Error(ErrorKind::kParseError, "tamper index out of range");
  t.index = j.get_ui();
  return t;
}

int cmd_auth_demo(const Options& o, std::ostream& out) {
  const ProjPublicKey alice_pub = proj_public_from_json(read_json_file(o.alice_pub));
  const ProjSecretKey alice_sec = proj_secret_from_json(read_json_file(o.alice_sec));
  const ProjPublicKey bob_pub = proj_public_from_json(read_json_file(o.bob_pub));
  const ProjSecretKey bob_sec = proj_secret_from_json(read_json_file(o.bob_sec));
  check_compatible(alice_pub, bob_pub);
  const Tamper tamper = parse_tamper(o.tamper, bob_pub.nu);
  const std::size_t m = o.m.value_or(max_half_length(bob_pub.n));

  Rng rng = make_rng(o.seed);
  const Word msg = read_message(o, alice_pub.nu);
  const ModMatrix c = encrypt(alice_pub, msg, o.with_length);
  auto [session, chal] = make_challenge(bob_pub, m, rng);
  const ModMatrix& tb = bob_pub.b[tamper.index];

  out << "message C for Alice: " << to_json(c).dump() << "\n";
  if (tamper.where == Tamper::Where::kChalPre) chal.chal = tb * chal.chal;
  if (tamper.where == Tamper::Where::kChalPost) chal.chal = chal.chal * tb;
  out << "Alice -> Bob   challenge (m = " << m << "): " << to_json(chal.chal).dump() << "\n";

  ModMatrix response = ModMatrix::identity(bob_pub.dim, bob_pub.p);
  try {
    response = respond(bob_sec, chal, c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kRejectChallenge) throw;
    out << "Bob refuses the challenge: " << e.what() << "\n";
    out << "REJECTED\n";
    return kExitCryptoFailure;
  }
  if (tamper.where == Tamper::Where::kPreMult) response = tb * response;
  if (tamper.where == Tamper::Where::kPostMult) response = response * tb;
  out << "Bob -> Alice   response: " << to_json(response).dump() << "\n";

  const ModMatrix recovered = recover(session, response);
  out << "Alice recovers C: " << to_json(recovered).dump() << "\n";
  try {
    const Word w = decrypt(alice_sec, recovered, o.with_length);
    out << "Alice decrypts: " << (o.text_given ? word_to_text(w) : w.str()) << "\n";
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) != kExitCryptoFailure) throw;
    out << "Alice cannot decrypt: " << e.what() << "\n";
    out << "REJECTED\n";
    return kExitCryptoFailure;
  }
  out << "ACCEPTED\n";
  return kExitOk;
}

// attack --------------------------------------------------------------------

int cmd_attack(const Options& o, std::ostream& out) {
  const Json key = read_json_file(o.pub);
  BruteForceOptions options;
  options.min_len = o.min_len;
  options.max_len = o.max_len;
  options.budget = o.budget;
  options.jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());

  BruteForceResult result;
  if (scheme_of(key) == "affine") {
    const AffinePublicKey pk = affine_public_from_json(key);
    result = brute_force(pk, parse_affine_cryptogram(o.cryptogram, pk.p), options);
  } else {
    const ProjPublicKey pk = proj_public_from_json(key);
    result = brute_force(pk, parse_proj_cryptogram(o.cryptogram, pk.dim, pk.p), options, o.with_length);
  }

  if (is_json(o)) {
    Json j = {{"found", result.word.has_value()}, {"trials", result.trials}, {"exhausted", result.exhausted}};
    if (result.word) j["word"] = result.word->str();
    out << j.dump(2) << "\n";
  } else if (result.word) {
    out << "found " << result.word->str() << " after " << result.trials << " trials\n";
  } else {
    out << "no message found after " << result.trials << " trials"
        << (result.exhausted ? " (search space exhausted)" : " (budget reached)") << "\n";
  }
  return result.word ? kExitOk : kExitCryptoFailure;
}

// analyze -------------------------------------------------------------------

int cmd_analyze(const Options& o, std::ostream& out) {
  const Json key = read_json_file(o.pub);
  if (scheme_of(key) != "affine") throw Error(ErrorKind::kInvalidParameter, "analyze works on affine public keys");
  const AffinePublicKey pk = affine_public_from_json(key);

  std::vector<CycleDecomposition> decomps(pk.g.size());
  std::vector<std::thread> workers;
  std::vector<std::optional<Error>> failures(pk.g.size());
  for (std::size_t j = 0; j < pk.g.size(); ++j) {
    workers.emplace_back([&, j] {
      try {
        decomps[j] = invariant_sets(pk.g[j]);
      } catch (const Error& e) {
        failures[j] = e;
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& f : failures) {
    if (f) throw *f;
  }

  Json report = {{"p", to_string(pk.p)}, {"maps", Json::array()}, {"intersections", Json::array()}};
  for (std::size_t j = 0; j < decomps.size(); ++j) {
    Json cycles = Json::array();
    for (const Cycle& c : decomps[j].cycles) cycles.push_back({{"representative", c.representative}, {"length", c.length}});
    report["maps"].push_back({{"slope", to_string(pk.g[j].slope.value())},
                              {"intercept", to_string(pk.g[j].intercept.value())},
                              {"cycles", cycles}});
  }
  for (std::size_t i = 0; i < decomps.size(); ++i) {
    for (std::size_t j = i + 1; j < decomps.size(); ++j) {
      const IntersectionReport r = intersection_report(decomps[i], decomps[j]);
      report["intersections"].push_back(
          {{"first", i}, {"second", j}, {"sizes", r.sizes}, {"separation_impossible", r.separation_impossible}});
    }
  }

  if (is_json(o)) {
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << "p = " << to_string(pk.p) << "\n";
  for (std::size_t j = 0; j < decomps.size(); ++j) {
    out << "g_" << j << "(x) = " << map_str(pk.g[j]) << ": " << decomps[j].cycles.size() << " cycles, sizes";
    for (const Cycle& c : decomps[j].cycles) out << " " << c.length;
    out << "\n";
  }
  for (const Json& r : report["intersections"]) {
    out << "intersections g_" << r["first"].get<std::size_t>() << " x g_" << r["second"].get<std::size_t>() << ":\n";
    for (const Json& row : r["sizes"]) {
      out << " ";
      for (const Json& v : row) out << " " << v.get<std::uint64_t>();
      out << "\n";
    }
    out << (r["separation_impossible"].get<bool>()
                ? "  every large cycle of one map meets every large cycle of the other: no separation\n"
                : "  some large cycles are disjoint: a common invariant set may exist\n");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated function system cryptosystems", "ifscrypt"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_message = [&o](CLI::App* cmd) {
    auto* msg = cmd->add_option("--message", o.message, "Message as digits over the alphabet");
    auto* txt = cmd->add_option("--text", o.text, "Message as text, mapped byte-wise to digits");
    msg->excludes(txt);
  };

  auto* kga = app.add_subcommand("keygen-affine", "Generate an affine key pair");
  kga->add_option("--system", o.system, "Affine system file")->required();
  kga->add_option("--n", o.n, "Maximum message length");
  kga->add_option("--p", o.p, "Prime modulus");
  kga->add_option("--a", o.a, "Conjugator slope");
  kga->add_option("--b", o.b, "Conjugator intercept");
  kga->add_flag("--fixed-length", o.fixed_length, "Encrypt words of exactly n symbols without padding");
  kga->add_flag("--lenient-conjugator", o.lenient_conjugator, "Only require a invertible mod p");
  kga->add_option("--seed", o.seed, "Seed for random parameters");
  kga->add_option("--out-pub", o.out_pub, "Public key output")->required();
  kga->add_option("--out-sec", o.out_sec, "Secret key output")->required();

  auto* kgp = app.add_subcommand("keygen-proj", "Generate a projective key pair");
  kgp->add_option("--system", o.system, "Projective system file")->required();
  kgp->add_option("--n", o.n, "Maximum message length");
  kgp->add_option("--p", o.p, "Prime modulus");
  kgp->add_option("--seed", o.seed, "Seed for random parameters");
  kgp->add_option("--out-pub", o.out_pub, "Public key output")->required();
  kgp->add_option("--out-sec", o.out_sec, "Secret key output")->required();

  auto* enc = app.add_subcommand("encrypt", "Encrypt a message");
  enc->add_option("--pub", o.pub, "Public key file")->required();
  add_message(enc);
  enc->add_flag("--with-length", o.with_length, "Embed a framed length field (projective keys)");
  enc->add_option("--out", o.out, "Write the cryptogram to a file");

  auto* dec = app.add_subcommand("decrypt", "Decrypt a cryptogram");
  dec->add_option("--sec", o.sec, "Secret key file")->required();
  dec->add_option("--cryptogram", o.cryptogram, "Cryptogram file or literal")->required();
  dec->add_flag("--with-length", o.with_length, "Check the framed length field (projective keys)");
  dec->add_flag("--text", o.as_text, "Print the message as text");
  dec->add_option("--out", o.out, "Write the message to a file");

  auto* auth = app.add_subcommand("auth-demo", "Run one authenticated exchange locally");
  auth->add_option("--alice-pub", o.alice_pub, "Alice's public key")->required();
  auth->add_option("--alice-sec", o.alice_sec, "Alice's secret key")->required();
  auth->add_option("--bob-pub", o.bob_pub, "Bob's public key")->required();
  auth->add_option("--bob-sec", o.bob_sec, "Bob's secret key")->required();
  add_message(auth);
  auth->add_option("--m", o.m, "Half length of the challenge words");
  auth->add_option("--seed", o.seed, "Seed for the challenge words");
  auth->add_flag("--with-length", o.with_length, "Frame the length inside C");
  auth->add_option("--tamper", o.tamper, "pre-mult:j, post-mult:j, chal-pre:j or chal-post:j");

  auto* atk = app.add_subcommand("attack", "Exhaustive search for the message");
  atk->add_option("--pub", o.pub, "Public key file")->required();
  atk->add_option("--cryptogram", o.cryptogram, "Cryptogram file or literal")->required();
  atk->add_option("--max-len", o.max_len, "Longest candidate")->required();
  atk->add_option("--min-len", o.min_len, "Shortest candidate");
  atk->add_option("--budget", o.budget, "Maximum number of candidates");
  atk->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
  atk->add_flag("--with-length", o.with_length, "Candidates carry a framed length field");
  add_format(atk);

  auto* ana = app.add_subcommand("analyze", "Cycle structure of the public maps");
  ana->add_option("--pub", o.pub, "Affine public key file")->required();
  add_format(ana);

  auto* rep = app.add_subcommand("reproduce", "Recompute the published worked examples");
  std::size_t rep_n = 2;
  std::string rep_p = "19";
  rep->add_option("--n", rep_n, "Message length for the 2x2 check");
  rep->add_option("--p", rep_p, "Prime for the 2x2 check");
  add_format(rep);

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests carry exit code 0; everything else is a usage error.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*kga) return cmd_keygen_affine(o, out, err);
    if (*kgp) return cmd_keygen_proj(o, out, err);
    if (*enc || *auth) {
      const CLI::App* cmd = *enc ? enc : auth;
      if (cmd->count("--message") + cmd->count("--text") != 1) {
        throw Error(ErrorKind::kInvalidParameter, "one of --message or --text is required");
      }
      o.text_given = cmd->count("--text") > 0;
    }
    if (*enc) return cmd_encrypt(o, out);
    if (*dec) return cmd_decrypt(o, out);
    if (*auth) return cmd_auth_demo(o, out);
    if (*atk) return cmd_attack(o, out);
    if (*ana) return cmd_analyze(o, out);
    if (*rep) return reproduce(rep_n, parse_integer(rep_p), is_json(o), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const Json::exception& e) {
    err << "error: parse-error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ifscrypt::cli
