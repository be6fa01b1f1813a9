// cybra-cli: batch driver exposing the library as reproducible commands
// with machine-readable (JSON or CSV) output.
//
// Commands: omega | decomp | saturation | singular
// Parameter styles (exactly one per job):
//   direct:      --a --r --u <comma rationals>
//   Lie-derived: --type {B,C,D} --n --p <comma ints> --i {1,2}
//                --c <comma rationals> [--r]
// Common: --K (omega order), --budget (default 5000), --out, --format.
// Exit codes: 0 ok, 2 input error, 3 budget exceeded, 4 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cybra/brauer.hpp"
#include "cybra/combinat.hpp"
#include "cybra/repanalysis.hpp"
#include "cybra/tensoro.hpp"
#include "cybra/weights.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace cybra;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

struct InputError {
  std::string message;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Rat> parse_rats(const std::string& s, const char* what) {
  std::vector<Rat> out;
  for (const std::string& tok : split_commas(s)) {
    auto v = rat_from_string(tok);
    if (!v) throw InputError{std::string("malformed rational in --") + what +
                             ": '" + tok + "'"};
    out.push_back(*v);
  }
  if (out.empty()) throw InputError{std::string("--") + what + " is empty"};
  return out;
}

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const std::string& tok : split_commas(s)) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError{std::string("malformed integer in --") + what + ": '" +
                       tok + "'"};
    }
  }
  if (out.empty()) throw InputError{std::string("--") + what + " is empty"};
  return out;
}

json rats_to_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_string(x));
  return a;
}

json lambda_to_json(const Multipartition& lambda) {
  json a = json::array();
  for (const Partition& c : lambda.comps) {
    json p = json::array();
    for (int part : c.parts) p.push_back(part);
    a.push_back(p);
  }
  return a;
}

std::string lambda_to_csv(const Multipartition& lambda) {
  std::string s;
  for (std::size_t c = 0; c < lambda.comps.size(); ++c) {
    if (c) s += "|";
    const auto& parts = lambda.comps[c].parts;
    s += "(";
    for (std::size_t t = 0; t < parts.size(); ++t) {
      if (t) s += " ";
      s += std::to_string(parts[t]);
    }
    s += ")";
  }
  return s;
}

json label_to_json(const std::pair<int, Multipartition>& l) {
  return json{{"f", l.first}, {"lambda", lambda_to_json(l.second)}};
}

// Resolved algebra-side parameters.
struct Resolved {
  int a = 0;
  std::vector<Rat> u;
  std::optional<RootDatum> rd;  // present in the Lie-derived style
  std::vector<Rat> c;
};

struct Options {
  int a = -1, r = -1, n = -1, i = -1, K = -1;
  long long budget = 5000;
  std::string u, type, p, c, out, format = "json";
};

Resolved resolve(const Options& o) {
  const bool direct = !o.u.empty();
  const bool lie = !o.type.empty() || o.n >= 0 || !o.p.empty() ||
                   o.i >= 0 || !o.c.empty();
  if (direct == lie)
    throw InputError{
        "exactly one parameter style: --u, or --type/--n/--p/--i/--c"};
  Resolved res;
  if (direct) {
    res.u = parse_rats(o.u, "u");
    res.a = static_cast<int>(res.u.size());
    if (o.a >= 0 && o.a != res.a)
      throw InputError{"--a does not match the arity of --u"};
    return res;
  }
  if (o.type.empty() || o.n < 0 || o.p.empty() || o.i < 0 || o.c.empty())
    throw InputError{"the Lie-derived style needs --type --n --p --i --c"};
  RootDatum rd;
  if (o.type == "B")
    rd.phi = LieType::B;
  else if (o.type == "C")
    rd.phi = LieType::C;
  else if (o.type == "D")
    rd.phi = LieType::D;
  else
    throw InputError{"--type must be B, C, or D"};
  rd.n = o.n;
  rd.p = parse_ints(o.p, "p");
  rd.i = o.i;
  try {
    rd.validate();
    res.c = parse_rats(o.c, "c");
    res.u = compute_u_params(rd, res.c);  // rejects type B with i = 1
  } catch (const std::invalid_argument& e) {
    throw InputError{e.what()};
  }
  res.a = static_cast<int>(res.u.size());
  res.rd = rd;
  return res;
}

long long brauer_dim_bound(int a, int r) {
  long long d = 1;
  for (int t = 0; t < r; ++t) d *= a;
  for (int t = 2 * r - 1; t >= 1; t -= 2) d *= t;
  return d;
}

void emit(const Options& o, const json& j, const std::string& csv) {
  std::string text =
      o.format == "json" ? j.dump(2) + "\n" : csv;
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError{"cannot open --out file: " + o.out};
    f << text;
  }
}

json header(const std::string& command) {
  return json{{"schema", 1}, {"command", command}};
}

int cmd_omega(const Options& o) {
  const Resolved res = resolve(o);
  const int K = o.K >= 0 ? o.K
                         : (o.r >= 0 ? res.a + 2 * o.r + 2 : res.a + 2);
  if (K > o.budget) return kExitBudget;
  const std::vector<Rat> om = admissible_omega(res.u, K);
  json j = header("omega");
  j["a"] = res.a;
  j["u"] = rats_to_json(res.u);
  j["K"] = K;
  j["omega"] = rats_to_json(om);
  std::string csv = "index,omega\n";
  for (std::size_t m = 0; m < om.size(); ++m)
    csv += std::to_string(m) + "," + rat_to_string(om[m]) + "\n";
  emit(o, j, csv);
  return kExitOk;
}

int cmd_decomp(const Options& o) {
  const Resolved res = resolve(o);
  if (o.r < 1) throw InputError{"decomp needs --r >= 1"};
  if (brauer_dim_bound(res.a, o.r) > o.budget) return kExitBudget;
  BrauerAlgebra B(make_brauer_params(res.a, o.r, res.u));
  json j = header("decomp");
  j["a"] = res.a;
  j["r"] = o.r;
  j["u"] = rats_to_json(res.u);
  j["dim"] = B.dimension();
  const Rat omega0 = B.params().omega[0];
  j["omega0"] = rat_to_string(omega0);
  if (omega0 == 0) {
    j["warning"] = "classification-unsupported";
    emit(o, j, "warning,classification-unsupported\n");
    return kExitOk;
  }
  const DecompositionMatrix dm = decomposition_matrix(B);
  json rows = json::array(), cols = json::array(), ent = json::array();
  json dim_c = json::array(), dim_d = json::array();
  for (const auto& l : dm.rows) {
    rows.push_back(label_to_json(l));
    dim_c.push_back(brauer_cell_action_module(B, l.first, l.second).dim);
  }
  for (const auto& l : dm.cols) {
    cols.push_back(label_to_json(l));
    dim_d.push_back(rank_bareiss(B.cell_module(l.first, l.second).gram));
  }
  for (const auto& row : dm.entries) {
    json r = json::array();
    for (long long e : row) r.push_back(e);
    ent.push_back(r);
  }
  j["rows"] = rows;
  j["cols"] = cols;
  j["entries"] = ent;
  j["dim_cell"] = dim_c;
  j["dim_simple"] = dim_d;
  std::string csv = "row_f,row_lambda";
  for (const auto& l : dm.cols)
    csv += ",f=" + std::to_string(l.first) + " " + lambda_to_csv(l.second);
  csv += "\n";
  for (std::size_t i = 0; i < dm.rows.size(); ++i) {
    csv += std::to_string(dm.rows[i].first) + "," +
           lambda_to_csv(dm.rows[i].second);
    for (long long e : dm.entries[i]) csv += "," + std::to_string(e);
    csv += "\n";
  }
  emit(o, j, csv);
  return kExitOk;
}

int cmd_saturation(const Options& o) {
  const Resolved res = resolve(o);
  if (!res.rd) throw InputError{"saturation needs the Lie-derived style"};
  if (o.r < 0) throw InputError{"saturation needs --r >= 0"};
  const SaturationReport rep = saturation_check(*res.rd, res.c, o.r);
  json j = header("saturation");
  j["r"] = o.r;
  j["u"] = rats_to_json(res.u);
  j["simple11"] = rep.simple11_ok;
  if (!rep.simple11_ok) j["warning"] = "assumption-simple11-violated";
  j["saturated"] = rep.saturated;
  if (!rep.saturated) {
    j["failed_level"] = rep.failed_level;
    j["witness_mu"] = rep.witness_mu ? rep.witness_mu->to_string() : "";
    j["witness_nu"] = rep.witness_nu ? rep.witness_nu->to_string() : "";
  }
  std::string csv = "key,value\nsimple11," +
                    std::string(rep.simple11_ok ? "true" : "false") +
                    "\nsaturated," +
                    std::string(rep.saturated ? "true" : "false") + "\n";
  emit(o, j, csv);
  return rep.saturated ? kExitOk : kExitVerify;
}

int cmd_singular(const Options& o) {
  const Resolved res = resolve(o);
  if (!res.rd) throw InputError{"singular needs the Lie-derived style"};
  if (o.r < 1) throw InputError{"singular needs --r >= 1"};
  if (res.rd->k() != 1 || o.r > 2)
    throw InputError{"singular scale guard: k = 1 and r <= 2"};
  if (brauer_dim_bound(res.a, o.r) > o.budget) return kExitBudget;
  const TensorDatum td = make_tensor_datum(*res.rd, res.c, o.r);
  BrauerAlgebra B(make_brauer_params(td.a, td.r, td.u));
  json j = header("singular");
  j["r"] = o.r;
  j["u"] = rats_to_json(res.u);
  json strata_j = json::array();
  std::string csv = "f,lambda,expected,count,ok\n";
  bool all_ok = true;
  for (const auto& [f, lambda] : strata(td.a, td.r)) {
    const SingularReport rep = verify_singular(td, B, f, lambda);
    json s;
    s["f"] = f;
    s["lambda"] = lambda_to_json(lambda);
    s["expected"] = rep.expected;
    s["count"] = rep.count;
    s["ok"] = rep.ok();
    if (!rep.ok()) s["witness"] = rep.witness;
    strata_j.push_back(s);
    csv += std::to_string(f) + "," + lambda_to_csv(lambda) + "," +
           std::to_string(rep.expected) + "," + std::to_string(rep.count) +
           "," + (rep.ok() ? "true" : "false") + "\n";
    all_ok = all_ok && rep.ok();
  }
  j["strata"] = strata_j;
  j["ok"] = all_ok;
  emit(o, j, csv);
  return all_ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cybra-cli: exact cyclotomic Brauer / tensor-module driver"};
  app.require_subcommand(1);
  Options o;
  std::vector<CLI::App*> subs;
  for (const char* name : {"omega", "decomp", "saturation", "singular"}) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("--a", o.a);
    s->add_option("--r", o.r);
    s->add_option("--u", o.u);
    s->add_option("--type", o.type);
    s->add_option("--n", o.n);
    s->add_option("--p", o.p);
    s->add_option("--i", o.i);
    s->add_option("--c", o.c);
    s->add_option("--K", o.K);
    s->add_option("--budget", o.budget);
    s->add_option("--out", o.out);
    s->add_option("--format", o.format)
        ->check(CLI::IsMember({"json", "csv"}));
    subs.push_back(s);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  try {
    if (subs[0]->parsed()) return cmd_omega(o);
    if (subs[1]->parsed()) return cmd_decomp(o);
    if (subs[2]->parsed()) return cmd_saturation(o);
    return cmd_singular(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerify;
  }
}
