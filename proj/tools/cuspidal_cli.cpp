// Command-line surface: batch subcommands emitting deterministic JSON (or
// TSV) tables for the cusp/divisor/order/series/residue/lattice/index
// computations. Exit codes: 0 ok, 2 usage, 3 domain, 4 internal invariant.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cuspidal/cuspidal.hpp>

namespace {

using nlohmann::ordered_json;
using namespace cuspidal;

constexpr std::int64_t kMaxN = 10'000'000;
constexpr const char* kSchema = "cuspidal-lab/1";

std::string int_str(const Integer& z) { return z.get_str(); }

std::string rat_str(const Rational& r) {
  Rational q = r;
  q.canonicalize();
  return q.get_str();
}

FactoredInteger checked_level(std::int64_t n) {
  if (n < 1 || n > kMaxN)
    throw usage_error("N must satisfy 1 <= N <= 10000000");
  return factorize(n);
}

// Sign vectors arrive either comma-separated ("+1,-1") or compact ("+-").
SignVector parse_eps(const std::string& text) {
  SignVector eps;
  if (text.empty()) return eps;
  bool compact = true;
  for (char c : text)
    if (c != '+' && c != '-') compact = false;
  if (compact) {
    for (char c : text) eps.push_back(c == '+' ? 1 : -1);
    return eps;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok == "+1" || tok == "1")
      eps.push_back(1);
    else if (tok == "-1")
      eps.push_back(-1);
    else
      throw usage_error("sign vector entries must be +1 or -1");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return eps;
}

std::string eps_canonical(const SignVector& eps) {
  std::string out;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i) out += ',';
    out += eps[i] == 1 ? "+1" : "-1";
  }
  return out;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void emit_tsv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += '\t';
      s += cells[i];
    }
    return s;
  };
  std::cout << line(header) << "\n";
  for (const auto& r : rows) std::cout << line(r) << "\n";
}

ordered_json envelope(const char* command, const FactoredInteger& N) {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["N"] = N.value;
  return j;
}

// ---------------------------------------------------------------- cusps ---
int run_cusps(std::int64_t n, bool tsv) {
  const FactoredInteger N = checked_level(n);
  const auto classes = enumerate_cusps(N);
  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  for (const auto& c : classes)
    for (std::int64_t x : c.representatives) {
      ordered_json r;
      r["level"] = c.level;
      r["z"] = c.z;
      r["orbit_size"] = c.orbit_size;
      r["field_degree"] = c.field_degree;
      r["representative"] = x;
      jrows.push_back(std::move(r));
      rows.push_back({std::to_string(c.level), std::to_string(c.z),
                      std::to_string(c.orbit_size),
                      std::to_string(c.field_degree), std::to_string(x)});
    }
  if (tsv) {
    emit_tsv({"level", "z", "orbit_size", "field_degree", "representative"},
             rows);
    return 0;
  }
  ordered_json j = envelope("cusps", N);
  j["cusp_count"] = cusp_count(N);
  j["rows"] = std::move(jrows);
  emit_json(j);
  return 0;
}

// -------------------------------------------------------------- divisor ---
int run_divisor(std::int64_t n, const std::string& eps_text, bool tsv) {
  const FactoredInteger N = checked_level(n);
  const SignVector eps = parse_eps(eps_text);
  const CuspidalDivisor C0 = build_C0(N, eps);
  const auto divs = divisors(N);
  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  for (std::size_t i = 0; i < divs.size(); ++i) {
    ordered_json r;
    r["level"] = divs[i];
    r["coeff"] = int_str(C0.coeffs[i]);
    jrows.push_back(std::move(r));
    rows.push_back({std::to_string(divs[i]), int_str(C0.coeffs[i])});
  }
  if (tsv) {
    emit_tsv({"level", "coeff"}, rows);
    return 0;
  }
  ordered_json j = envelope("divisor", N);
  j["eps"] = eps_canonical(eps);
  j["degree"] = int_str(degree(C0));
  j["coeffs"] = std::move(jrows);
  emit_json(j);
  return 0;
}

// ---------------------------------------------------------------- order ---
int run_order(std::int64_t n, const std::string& eps_text, bool tsv) {
  const FactoredInteger N = checked_level(n);
  const SignVector eps = parse_eps(eps_text);
  const Integer closed = order_closed_form(N, eps);
  const Integer path = order_matrix_path(N, eps);
  const bool agree = closed == path;
  if (!agree)
    throw internal_error("order paths disagree at N=" + std::to_string(n));
  if (tsv) {
    emit_tsv({"closed_form", "matrix_path", "agree"},
             {{int_str(closed), int_str(path), agree ? "true" : "false"}});
    return 0;
  }
  ordered_json j = envelope("order", N);
  j["eps"] = eps_canonical(eps);
  j["closed_form"] = int_str(closed);
  j["matrix_path"] = int_str(path);
  j["agree"] = agree;
  emit_json(j);
  return 0;
}

// ------------------------------------------------------------ eisenstein ---
int run_eisenstein(std::int64_t n, const std::string& eps_text, int terms,
                   bool tsv) {
  const FactoredInteger N = checked_level(n);
  const SignVector eps = parse_eps(eps_text);
  const ExactSeries E = build_E0(N, eps, terms);
  if (tsv) {
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k <= E.truncation; ++k)
      rows.push_back({std::to_string(k),
                      int_str(E.coeffs24[static_cast<std::size_t>(k)])});
    emit_tsv({"n", "coeff24"}, rows);
    return 0;
  }
  ordered_json j = envelope("eisenstein", N);
  j["eps"] = eps_canonical(eps);
  j["truncation"] = E.truncation;
  j["a0"] = rat_str(E.a(0));
  ordered_json arr = ordered_json::array();
  for (const auto& c : E.coeffs24) arr.push_back(int_str(c));
  j["coeffs24"] = std::move(arr);
  emit_json(j);
  return 0;
}

// -------------------------------------------------------------- residues ---
int run_residues(std::int64_t n, const std::string& eps_text, bool tsv) {
  const FactoredInteger N = checked_level(n);
  const SignVector eps = parse_eps(eps_text);
  const ResidueTable table = residues(N, eps);
  Rational weighted = rational(0, 1);
  for (const auto& row : table.rows)
    weighted += Integer(static_cast<long>(row.orbit_size)) * row.residue;
  if (tsv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : table.rows)
      rows.push_back({std::to_string(row.level),
                      std::to_string(row.orbit_size), rat_str(row.residue)});
    emit_tsv({"level", "orbit_size", "residue"}, rows);
    return 0;
  }
  ordered_json j = envelope("residues", N);
  j["eps"] = eps_canonical(eps);
  ordered_json jrows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["level"] = row.level;
    r["orbit_size"] = row.orbit_size;
    r["residue"] = rat_str(row.residue);
    jrows.push_back(std::move(r));
  }
  j["rows"] = std::move(jrows);
  j["weighted_sum"] = rat_str(weighted);
  j["weighted_sum_is_zero"] = sgn(weighted) == 0;
  emit_json(j);
  return 0;
}

// ----------------------------------------------------------------- beta ---
int run_beta(std::int64_t n, std::int64_t ell, bool tsv) {
  const FactoredInteger N = checked_level(n);
  const IntegerMatrix B = beta_matrix(N, ell);
  const auto cok = beta_cokernel_degree0(N, ell);
  if (tsv) {
    for (int i = 0; i < B.rows; ++i) {
      for (int j = 0; j < B.cols; ++j)
        std::cout << (j ? "\t" : "") << int_str(B.at(i, j));
      std::cout << "\n";
    }
    std::cout << "\n";
    for (std::size_t k = 0; k < cok.size(); ++k)
      std::cout << (k ? "\t" : "") << int_str(cok[k]);
    std::cout << "\n";
    return 0;
  }
  ordered_json j = envelope("beta", N);
  j["ell"] = ell;
  j["row_levels"] = divisors(factorize(n / ell));
  j["col_levels"] = divisors(N);
  ordered_json m = ordered_json::array();
  for (int i = 0; i < B.rows; ++i) {
    ordered_json r = ordered_json::array();
    for (int jj = 0; jj < B.cols; ++jj) r.push_back(int_str(B.at(i, jj)));
    m.push_back(std::move(r));
  }
  j["matrix"] = std::move(m);
  ordered_json d = ordered_json::array();
  for (const auto& c : cok) d.push_back(int_str(c));
  j["cokernel_elementary_divisors"] = std::move(d);
  emit_json(j);
  return 0;
}

// ----------------------------------------------------------------- index ---
int run_index(std::int64_t n, std::int64_t p, bool all_eps,
              bool exclude_all_plus, bool tsv) {
  (void)all_eps;  // the default already lists every sign vector
  const FactoredInteger N = checked_level(n);
  const bool has_p = p != 0;
  if (has_p && (p == 2 || !is_prime(p)))
    throw domain_error("index: p must be an odd prime");
  const char* kind = N.is_squarefree() ? "n_eps" : "n0_eps";
  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  for (const auto& eps : all_sign_vectors(N.squarefree_prime_count())) {
    if (exclude_all_plus && is_all_plus(eps) && !eps.empty()) continue;
    const Integer value = numerator_of(index_prenumerator(N, eps));
    ordered_json r;
    r["eps"] = eps_canonical(eps);
    r["value"] = int_str(value);
    std::vector<std::string> cells{eps_canonical(eps), int_str(value)};
    if (has_p) {
      const int v = value == 0 ? 0 : static_cast<int>(valuation(value, p));
      r["val_p"] = v;
      cells.push_back(std::to_string(v));
    }
    jrows.push_back(std::move(r));
    rows.push_back(std::move(cells));
  }
  if (tsv) {
    std::vector<std::string> header{"eps", "value"};
    if (has_p) header.push_back("val_p");
    emit_tsv(header, rows);
    return 0;
  }
  ordered_json j = envelope("index", N);
  j["kind"] = kind;
  if (has_p) j["p"] = p;
  j["rows"] = std::move(jrows);
  if (has_p && N.is_squarefree())
    j["p_exponent"] = squarefree_class_number_p(N, p, !exclude_all_plus);
  emit_json(j);
  return 0;
}

// ---------------------------------------------------------------- report ---
int run_report(std::int64_t n, std::int64_t p, bool exclude_all_plus,
               bool tsv) {
  const FactoredInteger N = checked_level(n);
  const IndexReport rep = index_report(N, p, !exclude_all_plus);
  if (tsv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : rep.rows)
      rows.push_back({eps_canonical(row.eps), int_str(row.index_value),
                      std::to_string(row.val_p),
                      row.order_defined ? int_str(row.order) : "-"});
    emit_tsv({"eps", "index_value", "val_p", "order"}, rows);
    return 0;
  }
  ordered_json j = envelope("report", N);
  j["p"] = rep.p;
  j["applicable"] = rep.applicable;
  if (!rep.applicable) j["reason"] = rep.reason;
  j["include_all_plus"] = rep.include_all_plus;
  ordered_json jrows = ordered_json::array();
  for (const auto& row : rep.rows) {
    ordered_json r;
    r["eps"] = eps_canonical(row.eps);
    r["index_value"] = int_str(row.index_value);
    r["val_p"] = row.val_p;
    r["order_defined"] = row.order_defined;
    if (row.order_defined) r["order"] = int_str(row.order);
    jrows.push_back(std::move(r));
  }
  j["rows"] = std::move(jrows);
  j["exponent_defined"] = rep.exponent_defined;
  if (rep.exponent_defined) j["p_exponent"] = rep.p_exponent;
  emit_json(j);
  return 0;
}

// -------------------------------------------------------------- selftest ---
// Library-level invariant sweeps; any violation raises internal_error and
// the process exits 4.

std::vector<SignVector> admissible_sign_vectors(const FactoredInteger& N) {
  std::vector<SignVector> out;
  for (auto& eps : all_sign_vectors(N.squarefree_prime_count()))
    if (admissible(N, eps)) out.push_back(std::move(eps));
  return out;
}

Integer odd_part(Integer z) {
  z = abs(z);
  while (z != 0 && z % 2 == 0) z /= 2;
  return z;
}

int run_selftest(std::int64_t max_n, bool tsv) {
  if (max_n < 1 || max_n > kMaxN)
    throw usage_error("selftest: bound must satisfy 1 <= B <= 10000000");
  auto fail = [](const std::string& what, std::int64_t n) {
    throw internal_error(what + " violated at N=" + std::to_string(n));
  };
  std::vector<std::pair<std::string, std::int64_t>> checks;

  // cusp counting and representative hygiene
  {
    std::int64_t cases = 0;
    for (std::int64_t n = 1; n <= max_n; ++n) {
      const FactoredInteger N = factorize(n);
      std::int64_t total = 0;
      for (const auto& c : enumerate_cusps(N)) {
        if (static_cast<std::int64_t>(c.representatives.size()) !=
            c.orbit_size)
          fail("cusp orbit size", n);
        for (std::int64_t x : c.representatives)
          if (x < 1 || x > c.level || std::gcd(x, c.level) != 1)
            fail("cusp representative range", n);
        total += c.orbit_size;
      }
      if (total != cusp_count(N)) fail("cusp count", n);
      ++cases;
    }
    checks.push_back({"cusp_enumeration", cases});
  }

  // C0: degree zero, closed-form coefficients, annihilation by the
  // Atkin-Lehner signs and by pushforward at higher primes
  {
    std::int64_t cases = 0;
    for (std::int64_t n = 1; n <= max_n; ++n) {
      const FactoredInteger N = factorize(n);
      for (const auto& eps : admissible_sign_vectors(N)) {
        const CuspidalDivisor C0 = build_C0(N, eps);
        if (degree(C0) != 0) fail("C0 degree", n);
        const auto divs = divisors(N);
        for (std::size_t i = 0; i < divs.size(); ++i)
          if (C0.coeffs[i] != c0_coefficient(N, eps, divs[i]))
            fail("C0 coefficient closed form", n);
        int sp = 0;
        for (const auto& pp : N.factors) {
          if (pp.exponent == 1) {
            const CuspidalDivisor W = atkin_lehner(C0, pp.prime);
            if (!(W == Integer(eps[sp]) * C0)) fail("Atkin-Lehner sign", n);
            ++sp;
          } else if (!is_zero(beta_pushforward(C0, pp.prime))) {
            fail("pushforward annihilation", n);
          }
        }
        ++cases;
      }
    }
    checks.push_back({"divisor_invariants", cases});
  }

  // both order computations agree, and their odd parts match the index
  // prenumerator's odd part
  {
    std::int64_t cases = 0;
    for (std::int64_t n = 1; n <= max_n; ++n) {
      const FactoredInteger N = factorize(n);
      for (const auto& eps : admissible_sign_vectors(N)) {
        const Integer a = order_closed_form(N, eps);
        if (a != order_matrix_path(N, eps)) fail("order agreement", n);
        if (odd_part(a) !=
            odd_part(numerator_of(index_prenumerator(N, eps))))
          fail("order odd part", n);
        ++cases;
      }
    }
    checks.push_back({"order_agreement", cases});
  }

  // residue table invariants
  {
    std::int64_t cases = 0;
    for (std::int64_t n = 2; n <= max_n; ++n) {
      const FactoredInteger N = factorize(n);
      for (const auto& eps : admissible_sign_vectors(N)) {
        const ResidueTable table = residues(N, eps);
        Rational sum = rational(0, 1);
        for (const auto& row : table.rows) {
          sum += Integer(static_cast<long>(row.orbit_size)) * row.residue;
          if (!factorize(row.level).is_squarefree() && sgn(row.residue) != 0)
            fail("residue vanishing", n);
        }
        if (sgn(sum) != 0) fail("residue weighted sum", n);
        const ExactSeries E = build_E0(N, eps, 2);
        if (residue_at(N, eps, n) != -E.a(0)) fail("residue at level N", n);
        ++cases;
      }
    }
    checks.push_back({"residue_invariants", cases});
  }

  // degree-0 cokernels of the pushforward (the library call itself enforces
  // the elementary-divisor facts)
  {
    std::int64_t cases = 0;
    for (std::int64_t n = 2; n <= max_n; ++n) {
      const FactoredInteger N = factorize(n);
      for (const auto& pp : N.factors) {
        beta_cokernel_degree0(N, pp.prime);
        ++cases;
      }
    }
    checks.push_back({"beta_cokernels", cases});
  }

  // q-expansions: a(1) = 1, U at square primes kills E, one Hecke eigenvalue
  {
    const std::int64_t bound = std::min<std::int64_t>(max_n, 60);
    const int T = 48;
    std::int64_t cases = 0;
    for (std::int64_t n = 1; n <= bound; ++n) {
      const FactoredInteger N = factorize(n);
      for (const auto& eps : admissible_sign_vectors(N)) {
        const ExactSeries E = build_E0(N, eps, T);
        if (E.a(1) != 1) fail("series normalization", n);
        for (const auto& pp : N.factors)
          if (pp.exponent >= 2 && !is_zero(hecke_U(pp.prime, E, N)))
            fail("U operator kills E", n);
        std::int64_t q = 2;
        while (n % q == 0) q = q == 2 ? 3 : q + 2;
        const ExactSeries TqE = hecke_T(q, E, N);
        for (int k = 0; k <= TqE.truncation; ++k)
          if (TqE.coeffs24[static_cast<std::size_t>(k)] !=
              (q + 1) * E.coeffs24[static_cast<std::size_t>(k)])
            fail("Hecke eigenvalue", n);
        ++cases;
      }
    }
    checks.push_back({"eisenstein_relations", cases});
  }

  if (tsv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [name, cases] : checks)
      rows.push_back({name, std::to_string(cases), "true"});
    emit_tsv({"check", "cases", "ok"}, rows);
    return 0;
  }
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "selftest";
  j["max_n"] = max_n;
  ordered_json jrows = ordered_json::array();
  for (const auto& [name, cases] : checks) {
    ordered_json r;
    r["check"] = name;
    r["cases"] = cases;
    r["ok"] = true;
    jrows.push_back(std::move(r));
  }
  j["checks"] = std::move(jrows);
  j["ok"] = true;
  emit_json(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cuspidal geometry of the modular curves X0(N)"};
  app.require_subcommand(1);

  std::int64_t n = 0, ell = 0, p = 0, max_n = 120;
  std::string eps_text;
  int terms = 24;
  bool tsv = false, all_eps = false, exclude_all_plus = false;

  auto* cusps = app.add_subcommand("cusps", "cusp table of X0(N)");
  cusps->add_option("N", n)->required();
  cusps->add_flag("--tsv", tsv);

  auto* divisor =
      app.add_subcommand("divisor", "coefficients of the divisor C0");
  divisor->add_option("N", n)->required();
  divisor->add_option("--eps", eps_text);
  divisor->add_flag("--tsv", tsv);

  auto* order =
      app.add_subcommand("order", "order of the class of C0, both routes");
  order->add_option("N", n)->required();
  order->add_option("--eps", eps_text);
  order->add_flag("--tsv", tsv);

  auto* eis = app.add_subcommand("eisenstein",
                                 "q-expansion of the Eisenstein series E0");
  eis->add_option("N", n)->required();
  eis->add_option("--eps", eps_text);
  eis->add_option("--terms", terms);
  eis->add_flag("--tsv", tsv);

  auto* res =
      app.add_subcommand("residues", "residue of E0 at each cusp class");
  res->add_option("N", n)->required();
  res->add_option("--eps", eps_text);
  res->add_flag("--tsv", tsv);

  auto* beta = app.add_subcommand(
      "beta", "pushforward matrix to level N/ell and its cokernel");
  beta->add_option("N", n)->required();
  beta->add_option("ell", ell)->required();
  beta->add_flag("--tsv", tsv);

  auto* index =
      app.add_subcommand("index", "index numerators over all sign vectors");
  index->add_option("N", n)->required();
  index->add_option("--p", p);
  auto* f_all = index->add_flag("--all-eps", all_eps);
  index->add_flag("--exclude-all-plus", exclude_all_plus)->excludes(f_all);
  index->add_flag("--tsv", tsv);

  auto* report = app.add_subcommand(
      "report", "per-prime applicability report with index and order rows");
  report->add_option("N", n)->required();
  report->add_option("p", p)->required();
  report->add_flag("--exclude-all-plus", exclude_all_plus);
  report->add_flag("--tsv", tsv);

  auto* selftest =
      app.add_subcommand("selftest", "run the library invariant sweeps");
  selftest->add_option("--max-n", max_n);
  selftest->add_flag("--tsv", tsv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto error_line = [](const char* kind, const std::string& what) {
    ordered_json j;
    j["schema"] = kSchema;
    j["error"] = kind;
    j["message"] = what;
    std::cerr << j.dump() << "\n";
  };

  try {
    if (cusps->parsed()) return run_cusps(n, tsv);
    if (divisor->parsed()) return run_divisor(n, eps_text, tsv);
    if (order->parsed()) return run_order(n, eps_text, tsv);
    if (eis->parsed()) return run_eisenstein(n, eps_text, terms, tsv);
    if (res->parsed()) return run_residues(n, eps_text, tsv);
    if (beta->parsed()) return run_beta(n, ell, tsv);
    if (index->parsed())
      return run_index(n, p, all_eps, exclude_all_plus, tsv);
    if (report->parsed()) return run_report(n, p, exclude_all_plus, tsv);
    if (selftest->parsed()) return run_selftest(max_n, tsv);
  } catch (const usage_error& e) {
    error_line("usage", e.what());
    return 2;
  } catch (const internal_error& e) {
    error_line("internal", e.what());
    return 4;
  } catch (const domain_error& e) {
    error_line("domain", e.what());
    return 3;
  }
  return 0;
}
