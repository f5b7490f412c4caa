// Command-line front end: every query prints one report envelope
//   {"tool": "xfam", "command": ..., "params": {...}, "result": {...},
//    "elapsed_ms": ...}
// as pretty JSON (or a flattened key,value CSV).  Exit codes: 0 success,
// 1 verification mismatch, 2 usage or cap error.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xfam/bounds.hpp"
#include "xfam/constructions.hpp"
#include "xfam/exactmath.hpp"
#include "xfam/json_io.hpp"
#include "xfam/oracle.hpp"
#include "xfam/setfamily.hpp"
#include "xfam/sweeps.hpp"

namespace {

using xfam::BigInt;
using xfam::Family;
using xfam::Json;
using xfam::Params;

std::string rational_str(const xfam::Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// compact one-line rendering: "[4,3],[2,2]"
std::string cascade_terms_str(const xfam::CascadeRep& rep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.terms.size(); ++i) {
    if (i) os << ',';
    os << '[' << rep.terms[i].top << ',' << rep.terms[i].under << ']';
  }
  return os.str();
}

Json family_report(const Family& f) {
  Json r;
  r["size"] = xfam::bigint_to_json(BigInt(f.members.size()));
  r["family"] = xfam::family_to_json(f);
  return r;
}

Json pair_report(const std::pair<Family, Family>& p) {
  const BigInt a = p.first.members.size();
  const BigInt b = p.second.members.size();
  Json r;
  r["sizes"] = Json::array({xfam::bigint_to_json(a), xfam::bigint_to_json(b)});
  r["product"] = xfam::bigint_to_json(a * b);
  r["A"] = xfam::family_to_json(p.first);
  r["B"] = xfam::family_to_json(p.second);
  return r;
}

long long to_ll(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != s.size())
    throw std::invalid_argument(std::string(what) + ": not an integer: " + s);
  return v;
}

// comma-separated 1-based elements, e.g. "2,3"
xfam::Mask parse_set(const std::string& s, int n) {
  std::vector<int> elems;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    elems.push_back(int(to_ll(tok, "set element")));
  return xfam::list_to_mask(elems, n);
}

// ---- CSV: dot-path flattening of the same envelope ------------------------

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void flatten(const Json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items())
      flatten(val, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "." + std::to_string(i), rows);
  } else if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else {
    rows.emplace_back(path, j.dump());
  }
}

std::string to_csv(const Json& envelope) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(envelope, "", rows);
  std::string out = "key,value\n";
  for (const auto& [key, val] : rows)
    out += csv_escape(key) + "," + csv_escape(val) + "\n";
  out.pop_back();
  return out;
}

// ---- construct dispatch ----------------------------------------------------

Json run_construct(const std::string& name, const std::vector<std::string>& arg,
                   Json& params) {
  const auto need = [&](std::size_t c) {
    if (arg.size() != c)
      throw std::invalid_argument("construct " + name + ": expected " +
                                  std::to_string(c) + " parameters, got " +
                                  std::to_string(arg.size()));
  };
  const auto num = [&](std::size_t i, const char* key) {
    const long long v = to_ll(arg[i], key);
    params[key] = v;
    return v;
  };
  if (name == "upper" || name == "lower") {
    need(4);
    const int n = int(num(0, "n")), u = int(num(1, "u"));
    const int r = int(num(2, "r")), s = int(num(3, "s"));
    return family_report(name == "upper" ? xfam::family_upper(n, u, r, s)
                                         : xfam::family_lower(n, u, r, s));
  }
  if (name == "slice_lower") {
    need(5);
    const int n = int(num(0, "n")), k = int(num(1, "k"));
    const int r = int(num(2, "r")), s = int(num(3, "s")), i = int(num(4, "i"));
    return family_report(xfam::slice_lower(n, k, r, s, i));
  }
  if (name == "slice_upper") {
    need(5);
    const int n = int(num(0, "n")), ell = int(num(1, "ell"));
    const int r = int(num(2, "r")), s = int(num(3, "s")), j = int(num(4, "j"));
    return family_report(xfam::slice_upper(n, ell, r, s, j));
  }
  if (name == "MT") {
    need(4);
    const int n = int(num(0, "n")), k = int(num(1, "k"));
    const int ell = int(num(2, "ell")), x = int(num(3, "x"));
    return pair_report(xfam::extremal_MT(n, k, ell, x));
  }
  if (name == "main1" || name == "main2") {
    need(3);
    const int n = int(num(0, "n")), k = int(num(1, "k"));
    const int ell = int(num(2, "ell"));
    return pair_report(name == "main1" ? xfam::extremal_main_1(n, k, ell)
                                       : xfam::extremal_main_2(n, k, ell));
  }
  if (name == "FKWX") {
    need(4);
    const int n = int(num(0, "n")), k = int(num(1, "k"));
    const int x = int(num(2, "x"));
    params["D"] = arg[3];
    return pair_report(xfam::extremal_FKWX(n, k, x, parse_set(arg[3], n)));
  }
  if (name == "sharp1") {
    need(1);
    return pair_report(xfam::sharpness_case1(int(num(0, "ell"))));
  }
  if (name == "sharp2") {
    need(1);
    return pair_report(xfam::sharpness_case2(int(num(0, "k"))));
  }
  throw std::invalid_argument("construct: unknown construction: " + name);
}

struct Report {
  Json params = Json::object();
  Json result = Json::object();
  int exit_code = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cross-intersecting family calculator"};
  app.require_subcommand(1);

  std::string format = "json";
  long long max_enumeration = xfam::kDefaultLevelCap;
  int workers = 1;
  unsigned long long seed = 0;  // reserved for sampling commands; inert here
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-enumeration", max_enumeration,
                 "largest enumeration level the search may expand");
  app.add_option("--workers", workers, "worker threads for search");
  app.add_option("--seed", seed, "seed for randomized sampling");

  std::vector<std::string> args(3);
  std::string order, name, theorem;
  std::vector<std::string> rest;
  bool nontrivial = false;
  std::vector<std::string> window;
  long long max_n_lemmas = 100, max_n_verify = 10;

  CLI::App* cascade = app.add_subcommand("cascade", "cascade representation");
  cascade->add_option("m", args[0])->required();
  cascade->add_option("k", args[1])->required();

  CLI::App* shadow = app.add_subcommand("shadow", "shadow of a family file");
  shadow->add_option("family", args[0], "family JSON file")->required();
  shadow->add_option("ell", args[1], "shadow level")->required();

  CLI::App* segment = app.add_subcommand("segment", "initial segment family");
  segment->add_option("order", order)->check(CLI::IsMember({"lex", "colex"}))
      ->required();
  segment->add_option("n", args[0])->required();
  segment->add_option("k", args[1])->required();
  segment->add_option("m", args[2])->required();

  CLI::App* construct = app.add_subcommand("construct", "named construction");
  construct->add_option("name", name)->required();
  construct->add_option("params", rest, "construction parameters");

  CLI::App* bound_cmd = app.add_subcommand("bound", "named product bound");
  bound_cmd->add_option("theorem", theorem)->required();
  bound_cmd->add_option("params", rest, "positional parameters");

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "nontrivial product bound");
  gamma_cmd->add_option("n", args[0])->required();
  gamma_cmd->add_option("k", args[1])->required();
  gamma_cmd->add_option("ell", args[2])->required();

  CLI::App* phi_cmd = app.add_subcommand("phi", "comparison polynomial");
  phi_cmd->add_option("n", args[0])->required();
  phi_cmd->add_option("k", args[1])->required();
  phi_cmd->add_option("ell", args[2])->required();
  phi_cmd->add_option("x", rest)->required();

  CLI::App* lemmas = app.add_subcommand("check-lemmas", "inequality sweeps");
  lemmas->add_option("--max-n", max_n_lemmas, "sweep ceiling");

  CLI::App* search = app.add_subcommand("search", "exhaustive pair search");
  search->add_option("n", args[0])->required();
  search->add_option("k", args[1])->required();
  search->add_option("ell", args[2])->required();
  search->add_flag("--nontrivial", nontrivial, "empty common intersection");
  search->add_option("--window", window, "bounds on |A|")->expected(2);

  CLI::App* verify = app.add_subcommand("verify", "bound vs oracle grid");
  verify->add_option("theorem", theorem)->required();
  verify->add_option("--max-n", max_n_verify, "grid ceiling");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (sub == cascade) {
      const long long m = to_ll(args[0], "m"), k = to_ll(args[1], "k");
      rep.params = {{"m", m}, {"k", k}};
      const xfam::CascadeRep cr = xfam::cascade(BigInt(m), k);
      rep.result["terms"] = cascade_terms_str(cr);
      rep.result["value"] = xfam::bigint_to_json(cr.value());
    } else if (sub == shadow) {
      const long long ell = to_ll(args[1], "ell");
      rep.params = {{"family", args[0]}, {"ell", ell}};
      std::ifstream in(args[0]);
      if (!in) throw std::invalid_argument("shadow: cannot open " + args[0]);
      const Family f = xfam::family_from_json(Json::parse(in));
      rep.result = family_report(xfam::shadow(f, int(ell)));
    } else if (sub == segment) {
      const long long n = to_ll(args[0], "n"), k = to_ll(args[1], "k");
      const BigInt m(args[2]);
      rep.params = {{"order", order}, {"n", n}, {"k", k},
                    {"m", xfam::bigint_to_json(m)}};
      rep.result = family_report(order == "lex"
                                     ? xfam::lex_segment(int(n), int(k), m)
                                     : xfam::colex_segment(int(n), int(k), m));
    } else if (sub == construct) {
      rep.params["name"] = name;
      rep.result = run_construct(name, rest, rep.params);
    } else if (sub == bound_cmd) {
      const xfam::Theorem t = xfam::theorem_from_name(theorem);
      const auto& names = xfam::theorem_param_names(t);
      if (rest.size() != names.size())
        throw std::invalid_argument(
            "bound " + theorem + ": expected " + std::to_string(names.size()) +
            " parameters, got " + std::to_string(rest.size()));
      Params p;
      rep.params["theorem"] = theorem;
      for (std::size_t i = 0; i < names.size(); ++i) {
        p[names[i]] = to_ll(rest[i], names[i].c_str());
        rep.params[names[i]] = p[names[i]];
      }
      rep.result = xfam::bound_report_to_json(xfam::bound(t, p));
    } else if (sub == gamma_cmd) {
      const long long n = to_ll(args[0], "n"), k = to_ll(args[1], "k");
      const long long ell = to_ll(args[2], "ell");
      rep.params = {{"n", n}, {"k", k}, {"ell", ell}};
      rep.result["value"] = xfam::bigint_to_json(xfam::gamma(n, k, ell));
    } else if (sub == phi_cmd) {
      const long long n = to_ll(args[0], "n"), k = to_ll(args[1], "k");
      const long long ell = to_ll(args[2], "ell");
      const long long x = to_ll(rest.at(0), "x");
      rep.params = {{"n", n}, {"k", k}, {"ell", ell}, {"x", x}};
      rep.result["value"] = rational_str(xfam::phi(n, k, ell, x).value);
    } else if (sub == lemmas) {
      rep.params = {{"max_n", max_n_lemmas}};
      Json sweeps = Json::array();
      bool all_hold = true;
      for (const xfam::LemmaSweep& s :
           xfam::run_lemma_sweeps(max_n_lemmas, &std::cerr)) {
        all_hold = all_hold && s.holds();
        sweeps.push_back(xfam::lemma_sweep_to_json(s));
      }
      rep.result["all_hold"] = all_hold;
      rep.result["lemmas"] = std::move(sweeps);
      rep.exit_code = all_hold ? 0 : 1;
    } else if (sub == search) {
      const long long n = to_ll(args[0], "n"), k = to_ll(args[1], "k");
      const long long ell = to_ll(args[2], "ell");
      rep.params = {{"n", n}, {"k", k}, {"ell", ell},
                    {"nontrivial", nontrivial}};
      xfam::SearchConstraints cons;
      cons.nontrivial = nontrivial;
      if (!window.empty()) {
        cons.size_window = {BigInt(window[0]), BigInt(window[1])};
        rep.params["window"] = Json{{"lo", window[0]}, {"hi", window[1]}};
      }
      rep.params["max_enumeration"] = max_enumeration;
      rep.params["workers"] = workers;
      rep.result = xfam::search_result_to_json(xfam::search_exhaustive(
          int(n), int(k), int(ell), cons, int(max_enumeration), workers));
    } else if (sub == verify) {
      const xfam::Theorem t = xfam::theorem_from_name(theorem);
      rep.params = {{"theorem", theorem}, {"max_n", max_n_verify}};
      const xfam::VerifyReport vr = xfam::verify_theorem(t, max_n_verify);
      rep.result = xfam::verify_report_to_json(vr);
      rep.exit_code = vr.all_match() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "xfam: " << e.what() << "\n";
    return 2;
  }

  Json envelope;
  envelope["tool"] = "xfam";
  envelope["command"] = sub->get_name();
  envelope["params"] = std::move(rep.params);
  envelope["result"] = std::move(rep.result);
  envelope["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count();
  std::cout << (format == "csv" ? to_csv(envelope) : envelope.dump(2)) << "\n";
  return rep.exit_code;
}
