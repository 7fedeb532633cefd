#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nilcollect/claims.hpp"
#include "nilcollect/collector.hpp"
#include "nilcollect/expr.hpp"
#include "nilcollect/magnus.hpp"
#include "nilcollect/power_polys.hpp"
#include "nilcollect/residue.hpp"
#include "nilcollect/strata.hpp"

using json = nlohmann::json;
using namespace nilcollect;

namespace {

// "a,b" or "c:2,d:3" -> generator declarations.
std::vector<GeneratorDecl> parse_gens(const std::string& spec) {
  std::vector<GeneratorDecl> out;
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string::npos) {
      out.push_back({part, 1});
    } else {
      out.push_back({part.substr(0, colon), std::stoi(part.substr(colon + 1))});
    }
  }
  if (out.empty()) throw CLI::ValidationError("--gens", "no generators given");
  return out;
}

std::vector<std::string> gen_names(const std::vector<GeneratorDecl>& gens) {
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name);
  return names;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::trunc);
    f << text;
  }
}

int cmd_basis(const std::string& gens_s, int cls, bool as_json) {
  Basis b(parse_gens(gens_s), cls);
  if (as_json) {
    json arr = json::array();
    for (const auto& e : b.elements()) {
      json rec = {{"id", e.id}, {"weight", e.weight}};
      if (e.is_generator())
        rec["gen"] = b.generators()[e.gen - 1].name;
      else
        rec["def"] = {e.left, e.right};
      arr.push_back(rec);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& e : b.elements())
      std::cout << e.id << "\t" << e.weight << "\t" << b.str(e.id) << "\n";
  }
  return 0;
}

int cmd_collect(const std::string& gens_s, int cls, const std::string& expr_s, bool as_json) {
  auto gens = parse_gens(gens_s);
  GroupContext ctx(Basis(gens, cls));
  ExponentVector nf = eval(parse(expr_s, gen_names(gens)), ctx);
  if (as_json) {
    json obj = json::object();
    for (const auto& [id, e] : nf.exponents()) obj[std::to_string(id)] = to_string(e);
    std::cout << obj.dump(2) << "\n";
  } else {
    if (nf.is_identity()) std::cout << "(identity)\n";
    for (const auto& [id, e] : nf.exponents())
      std::cout << ctx.basis().str(id) << "\t" << to_string(e) << "\n";
  }
  return 0;
}

int cmd_oracle_check(const std::string& gens_s, int cls, const std::string& expr_s) {
  auto gens = parse_gens(gens_s);
  GroupContext ctx(Basis(gens, cls));
  ExprPtr e = parse(expr_s, gen_names(gens));
  ExponentVector nf = eval(e, ctx);
  MagnusRing ring(ctx.basis());
  Series lhs = magnus_expr_image(ring, ctx.basis(), e);
  Series rhs = Series::one(ring);
  for (const auto& [id, ex] : nf.exponents())
    rhs = rhs * magnus_basis_image(ring, ctx.basis(), id).pow(ex);
  if (lhs != rhs) {
    std::cerr << "MISMATCH: the collected normal form does not match the series image\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

int cmd_hallpoly(int cls, const std::string& fmt, const std::string& out_path, bool no_cache) {
  HallExpansion h = hall_expansion(cls, !no_cache);
  const Basis& b = h.context().basis();
  std::ostringstream out;
  if (fmt == "json") {
    json arr = json::array();
    for (int id = 1; id <= b.size(); ++id) {
      json coeffs = json::array();
      for (const auto& c : h.poly(id).coeffs) coeffs.push_back(to_string(c));
      arr.push_back({{"basisId", id}, {"weight", b.weight_of(id)}, {"binomialCoeffs", coeffs}});
    }
    out << arr.dump(2) << "\n";
  } else {
    for (int id = 1; id <= b.size(); ++id) {
      out << id << "\t" << b.str(id) << "\t";
      const auto& p = h.poly(id);
      if (p.coeffs.empty()) out << "0";
      for (size_t j = 0; j < p.coeffs.size(); ++j) {
        if (j) out << ' ';
        out << to_string(p.coeffs[j]);
      }
      out << "\n";
    }
  }
  emit(out.str(), out_path);
  return 0;
}

int cmd_binres(unsigned p, unsigned d, unsigned scale, long mod, const std::string& krange,
               bool as_json) {
  auto colon = krange.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--krange", "expected the form MIN:MAX");
  unsigned k_min = std::stoul(krange.substr(0, colon));
  unsigned k_max = std::stoul(krange.substr(colon + 1));
  StabilityReport rep = verify_residue_stability(p, d, scale, mod, k_min, k_max);
  if (as_json) {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"k", r.k},
                      {"q", to_string(r.q)},
                      {"binom", to_string(r.binom)},
                      {"scaled", to_string(r.scaled)},
                      {"residue", to_string(r.residue)}});
    json j = {{"p", p},       {"d", d},           {"scale_exp", scale},
              {"mod", mod},   {"rows", rows},     {"stable", rep.stable},
              {"residue", to_string(rep.residue)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "q\tC(q," << d << ")\tn\tn mod " << mod << "\n";
    for (const auto& r : rep.rows)
      std::cout << to_string(r.q) << "\t" << to_string(r.binom) << "\t" << to_string(r.scaled)
                << "\t" << to_string(r.residue) << "\n";
    std::cout << (rep.stable ? "stable" : "UNSTABLE")
              << (rep.stable ? " residue " + to_string(rep.residue) : "") << "\n";
  }
  return rep.stable ? 0 : 1;
}

int cmd_rv(const std::string& spec_name, long q, int cls, const std::string& expr_s,
           bool as_json) {
  StratificationSpec spec = StratificationSpec::by_name(spec_name, q, cls);
  HallExpansion h = hall_expansion(cls);
  const GroupContext& ctx = h.context();
  ExponentVector u = eval(parse(expr_s, {"a", "b"}), ctx);
  RepVector v = rv(u, spec);
  if (as_json) {
    json coords = json::array();
    for (size_t i = 0; i < v.entries.size(); ++i)
      if (v.entries[i])
        coords.push_back({{"id", static_cast<int>(i) + 3},
                          {"element", ctx.basis().str(static_cast<int>(i) + 3)},
                          {"residue", v.entries[i]}});
    json j = {{"spec", spec_name}, {"q", q}, {"class", cls}, {"zero", v.is_zero()},
              {"coordinates", coords}};
    std::cout << j.dump(2) << "\n";
  } else {
    if (v.is_zero()) std::cout << "(zero vector: element lies in N)\n";
    for (size_t i = 0; i < v.entries.size(); ++i)
      if (v.entries[i])
        std::cout << ctx.basis().str(static_cast<int>(i) + 3) << "\t" << v.entries[i] << "\n";
  }
  return 0;
}

int cmd_rv_scan(const std::string& spec_name, int cls, const std::string& qs_s, int pair_count,
                bool as_json) {
  std::vector<long> qs;
  {
    std::istringstream in(qs_s);
    std::string part;
    while (std::getline(in, part, ',')) qs.push_back(std::stol(part));
  }
  if (qs.size() < 2) throw CLI::ValidationError("--qs", "need at least two q values");
  HallExpansion h = hall_expansion(cls);
  const GroupContext& ctx = h.context();
  GroupContext ctx2(Basis({{"a", 1}, {"b", 1}}, 2));
  std::vector<ExprPtr> words = enumerate_sample_words(2, ctx2);
  int mismatches = 0, done = 0;
  json rows = json::array();
  for (size_t i = 0; i < words.size() && done < pair_count; ++i)
    for (size_t j = 0; j < words.size() && done < pair_count; ++j) {
      if (i == j) continue;
      const ExprPtr &x = words[j], &y = words[i];
      std::vector<RepVector> vs;
      for (long q : qs) {
        StratificationSpec spec = StratificationSpec::by_name(spec_name, q, cls);
        vs.push_back(rv_power_commutator(x, y, spec, h, ctx));
      }
      bool same = true;
      for (const auto& v : vs) same &= (v.entries == vs[0].entries);
      mismatches += !same;
      ++done;
      if (as_json) {
        rows.push_back({{"x", print(x)}, {"y", print(y)}, {"equal", same}});
      } else {
        std::cout << (same ? "ok  " : "DIFF") << "  x=" << print(x) << "  y=" << print(y) << "\n";
      }
    }
  if (as_json) {
    json j = {{"spec", spec_name}, {"class", cls}, {"qs", qs}, {"pairs", done},
              {"mismatches", mismatches}, {"rows", rows}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << done << " pairs, " << mismatches << " mismatches\n";
  }
  return mismatches == 0 ? 0 : 1;
}

int cmd_span(const std::string& spec_name, long q, int cls, int max_len,
             const std::string& probe, const std::string& out_path) {
  StratificationSpec spec = StratificationSpec::by_name(spec_name, q, cls);
  HallExpansion h = hall_expansion(cls);
  const GroupContext& ctx = h.context();
  GroupContext ctx2(Basis({{"a", 1}, {"b", 1}}, 2));
  std::vector<ExprPtr> words = enumerate_sample_words(max_len, ctx2);
  SpanState span(spec);
  int added = 0, total = 0;
  for (const auto& y : words)
    for (const auto& x : words) {
      if (x == y) continue;
      added += span.add(rv_power_commutator(x, y, spec, h, ctx));
      ++total;
    }
  json j = {{"spec", spec_name},
            {"q", q},
            {"class", cls},
            {"max_word_len", max_len},
            {"pairs", total},
            {"independent_generators", added},
            {"pivots", span.pivot_count()},
            {"rank_profile", span.rank_profile()},
            {"note", "the sampled span is a subgroup of the full one; membership answers are "
                     "relative to the sample"}};
  if (!probe.empty()) {
    ExponentVector u = eval(parse(probe, {"a", "b"}), ctx);
    j["probe"] = probe;
    j["probe_in_sampled_span"] = span.contains(rv(u, spec));
  }
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_verify(bool heavy, const std::string& filter, bool as_json, const std::string& out_path) {
  std::vector<ClaimRecord> recs = run_claims(filter, heavy);
  std::ostringstream out;
  bool any_fail = false;
  for (const auto& r : recs) {
    any_fail |= (r.verdict == "fail");
    if (as_json) {
      json j = {{"id", r.id},           {"summary", r.summary}, {"heavy", r.heavy},
                {"verdict", r.verdict}, {"evidence", r.evidence}, {"runtime_s", r.runtime_s}};
      out << j.dump() << "\n";
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%7.2fs", r.runtime_s);
      out << (r.verdict == "pass" ? "PASS" : r.verdict == "fail" ? "FAIL" : "SKIP") << "  "
          << buf << "  " << r.id << "\n";
    }
  }
  emit(out.str(), out_path);
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in free nilpotent groups via basic-commutator collection"};
  app.require_subcommand(1);

  std::string gens = "a,b", expr_s, filter = "*", fmt = "text", out_path, krange = "5:12";
  std::string spec_name = "2power", qs_s = "32,64,128", probe;
  int cls = 6, pair_count = 20, max_len = 2;
  long q = 32, mod = 8;
  unsigned p = 2, d = 8, scale = 3;
  bool as_json = false, heavy = false, no_cache = false;

  auto* basis = app.add_subcommand("basis", "Print the ordered basic-commutator basis");
  basis->add_option("--gens", gens, "Generators, name[:weight] comma-separated");
  basis->add_option("--class", cls, "Nilpotency class (weight cap)")->required();
  basis->add_flag("--json", as_json);

  auto* collect = app.add_subcommand("collect", "Collect an expression to normal form");
  collect->add_option("--gens", gens);
  collect->add_option("--class", cls)->required();
  collect->add_flag("--json", as_json);
  collect->add_option("expr", expr_s, "Group word")->required();

  auto* oracle = app.add_subcommand("oracle-check",
                                    "Check a collected normal form against the series embedding");
  oracle->add_option("--gens", gens);
  oracle->add_option("--class", cls)->required();
  oracle->add_option("expr", expr_s)->required();

  auto* hallpoly = app.add_subcommand("hallpoly", "Emit the power-expansion polynomials");
  hallpoly->add_option("--class", cls)->required();
  hallpoly->add_option("--emit", fmt, "text | json");
  hallpoly->add_option("--out", out_path);
  hallpoly->add_flag("--no-cache", no_cache);

  auto* binres = app.add_subcommand("binres", "Scaled binomial residue stability table");
  binres->add_option("--p", p)->required();
  binres->add_option("--d", d)->required();
  binres->add_option("--scale", scale, "j in divisor q/p^j");
  binres->add_option("--mod", mod)->required();
  binres->add_option("--krange", krange, "MIN:MAX exponent range for q = p^k");
  binres->add_flag("--json", as_json);

  auto* rv_cmd = app.add_subcommand("rv", "Representative vector of an element's coset");
  rv_cmd->add_option("--spec", spec_name, "2power | 3power | 5power");
  rv_cmd->add_option("--q", q)->required();
  rv_cmd->add_option("--class", cls)->required();
  rv_cmd->add_flag("--json", as_json);
  rv_cmd->add_option("expr", expr_s)->required();

  auto* scan = app.add_subcommand("rv-scan", "q-independence experiment for rv([y^q,x])");
  scan->add_option("--spec", spec_name);
  scan->add_option("--class", cls);
  scan->add_option("--qs", qs_s, "Comma-separated q values");
  scan->add_option("--pairs", pair_count);
  scan->add_flag("--json", as_json);

  auto* span = app.add_subcommand("span", "Accumulate the span of sampled rv([y^q,x]) vectors");
  span->add_option("--spec", spec_name);
  span->add_option("--q", q);
  span->add_option("--class", cls);
  span->add_option("--maxlen", max_len, "Maximum sampled word length");
  span->add_option("--probe", probe, "Expression whose rv is tested for span membership");
  span->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Run the claim registry");
  verify->add_flag("--heavy", heavy, "Include heavy (class-13 representative-vector) claims");
  verify->add_option("--filter", filter, "Glob over claim ids");
  verify->add_flag("--json", as_json, "One JSON record per line");
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*basis) return cmd_basis(gens, cls, as_json);
    if (*collect) return cmd_collect(gens, cls, expr_s, as_json);
    if (*oracle) return cmd_oracle_check(gens, cls, expr_s);
    if (*hallpoly) return cmd_hallpoly(cls, fmt, out_path, no_cache);
    if (*binres) return cmd_binres(p, d, scale, mod, krange, as_json);
    if (*rv_cmd) return cmd_rv(spec_name, q, cls, expr_s, as_json);
    if (*scan) return cmd_rv_scan(spec_name, cls, qs_s, pair_count, as_json);
    if (*span) return cmd_span(spec_name, q, cls, max_len, probe, out_path);
    if (*verify) return cmd_verify(heavy, filter, as_json, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
