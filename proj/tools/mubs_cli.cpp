// Command-line front end for the mubs library: generate bases in exponent
// form, verify orthonormality/unbiasedness claims exactly or in floating
// point, print discrete Pauli operator tables and commuting classes, run the
// small circuit demos, and print basis-count bounds.
//
// Exit codes: 0 success, 1 verification violation, 2 usage or parse error.

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mubs/constructions.hpp"
#include "mubs/pauli.hpp"
#include "mubs/serialize.hpp"
#include "mubs/simulator.hpp"
#include "mubs/verify.hpp"

namespace {

using mubs::sim::cplx;

// ---------------------------------------------------------------------------
// formatting helpers
// ---------------------------------------------------------------------------

std::string fmt_num(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) < 1e-9) return std::to_string(static_cast<long long>(r == 0 ? 0 : r));
  std::ostringstream o;
  o << std::setprecision(12) << v;
  return o.str();
}

// One amplitude as a compact string: "0.6", "-1", "i", "0.8i", "(0.6-0.8i)".
std::string fmt_amp(const cplx& z) {
  const bool has_re = std::abs(z.real()) >= 1e-12;
  const bool has_im = std::abs(z.imag()) >= 1e-12;
  if (!has_im) return fmt_num(z.real());
  std::string im;
  if (std::abs(z.imag() - 1) < 1e-12)
    im = "i";
  else if (std::abs(z.imag() + 1) < 1e-12)
    im = "-i";
  else
    im = fmt_num(z.imag()) + "i";
  if (!has_re) return im;
  return "(" + fmt_num(z.real()) + (z.imag() < 0 ? "" : "+") + im + ")";
}

// a|0> + b|1> with unit coefficients dropped and zero terms skipped.
std::string qubit_string(const mubs::sim::StateVector& s) {
  std::string out;
  for (int k = 0; k < 2; ++k) {
    if (std::abs(s.amps[static_cast<size_t>(k)]) < 1e-12) continue;
    std::string coeff = fmt_amp(s.amps[static_cast<size_t>(k)]);
    if (coeff == "1") coeff.clear();
    if (coeff == "-1") coeff = "-";
    std::string term = coeff + "|" + std::to_string(k) + "⟩";
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

size_t display_width(const std::string& s) {
  size_t n = 0;
  for (const unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;  // count UTF-8 lead bytes
  return n;
}

// ---------------------------------------------------------------------------
// state parsing: comma-separated complex amplitudes
// ---------------------------------------------------------------------------

double parse_real(const std::string& s) {
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty())
    throw std::invalid_argument("bad number in state: '" + s + "'");
  return v;
}

// Accepts "1", "-0.5", "1e-3", "i", "-i", "2i", "1+2i", "0.6-0.8i".
cplx parse_complex(const std::string& raw) {
  std::string s;
  for (const char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty component in state");
  if (s.back() != 'i' && s.back() != 'I') return {parse_real(s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  size_t split = std::string::npos;  // last +/- that starts the imaginary part
  for (size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+")
    im_part = "1";
  else if (im_part == "-")
    im_part = "-1";
  return {re_part.empty() ? 0.0 : parse_real(re_part), parse_real(im_part)};
}

std::vector<cplx> parse_amplitudes(const std::string& csv) {
  if (csv.empty() || csv.back() == ',')
    throw std::invalid_argument("state must be a comma-separated amplitude list");
  std::vector<cplx> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(parse_complex(tok));
  return out;
}

// Two comma-separated amplitudes, normalized to a unit one-qubit state.
mubs::sim::StateVector parse_qubit(const std::string& csv) {
  auto amps = parse_amplitudes(csv);
  if (amps.size() != 2)
    throw std::invalid_argument("expected two comma-separated amplitudes, got " +
                                std::to_string(amps.size()));
  const double n2 = std::norm(amps[0]) + std::norm(amps[1]);
  if (n2 < 1e-24) throw std::invalid_argument("state must be nonzero");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= inv;
  return mubs::sim::StateVector::from_amplitudes({2}, std::move(amps));
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int run_gen(const mubs::MubSet& set, const std::string& format, bool numeric,
            const std::string& out_path) {
  if (numeric && format != "csv")
    throw std::invalid_argument("--numeric requires --format csv");
  std::string text;
  if (format == "json")
    text = mubs::mub_to_json_string(set);
  else if (format == "csv")
    text = mubs::mub_to_csv(set, numeric);
  else
    text = mubs::mub_to_pretty(set);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
    f << text;
    if (!f) throw std::invalid_argument("failed writing '" + out_path + "'");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

mubs::MubSet set_from_tokens(const std::vector<std::string>& t) {
  if (t.empty()) throw std::invalid_argument("verify --gen: missing method");
  const std::string& m = t[0];
  const auto want = [&](size_t n) {
    if (t.size() != n + 1)
      throw std::invalid_argument("verify --gen " + m + ": expected " + std::to_string(n) +
                                  " numeric parameter(s), got " + std::to_string(t.size() - 1));
  };
  const auto num = [&](size_t i) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t[i], &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != t[i].size() || t[i].empty())
      throw std::invalid_argument("verify --gen: bad integer '" + t[i] + "'");
    return static_cast<int64_t>(v);
  };
  if (m == "master") {
    want(1);
    return mubs::mub_master(num(1));
  }
  if (m == "alternative") {
    want(1);
    return mubs::mub_alternative(num(1));
  }
  if (m == "gf") {
    want(2);
    return mubs::mub_gf(num(1), num(2));
  }
  if (m == "gr") {
    want(1);
    return mubs::mub_gr(num(1));
  }
  if (m == "w4") {
    want(0);
    return mubs::mub_w4();
  }
  throw std::invalid_argument("verify --gen: unknown method '" + m +
                              "' (expected master, alternative, gf, gr, or w4)");
}

int run_verify(const std::string& in_path, const std::vector<std::string>& gen_tokens,
               const std::string& mode, double tol) {
  mubs::MubSet set;
  if (!in_path.empty()) {
    std::ifstream f(in_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + in_path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    set = mubs::mub_from_json_string(buf.str());
  } else {
    set = set_from_tokens(gen_tokens);
  }

  mubs::CheckOptions opt;
  opt.mode = mode == "float" ? mubs::CheckMode::Float : mubs::CheckMode::Exact;
  opt.tol = tol;
  const mubs::VerificationReport report = mubs::check_mub_set(set, opt);
  std::cout << mubs::report_to_json(report).dump(2) << "\n";

  size_t bases_ok = 0;
  for (const auto& b : report.basis_checks) bases_ok += b.ok ? 1 : 0;
  size_t pairs_ok = 0;
  for (const auto& p : report.pair_checks) pairs_ok += p.ok ? 1 : 0;
  std::cerr << "verdict: " << mubs::verdict_name(report.verdict) << " (" << bases_ok << "/"
            << report.basis_checks.size() << " bases orthonormal, " << pairs_ok << "/"
            << report.pair_checks.size() << " pairs unbiased)\n";
  return report.verdict == mubs::Verdict::Violation ? 1 : 0;
}

// ---------------------------------------------------------------------------
// pauli
// ---------------------------------------------------------------------------

std::string entry_symbol(const mubs::CycloInt& e, int64_t d) {
  if (e.is_zero()) return "0";
  const auto k = e.as_root_of_unity();
  if (!k) return "<sum>";  // unreachable for monomial operator entries
  const int64_t kk = *k;
  if (kk == 0) return "1";
  if (2 * kk == d) return "-1";
  if (d % 4 == 0 && kk == d / 4) return "i";
  if (d % 4 == 0 && kk == 3 * (d / 4)) return "-i";
  return "ω^" + std::to_string(kk);
}

void print_matrix(std::ostream& os, const mubs::ExactMatrix& m, int64_t d) {
  std::vector<std::string> cells;
  size_t w = 1;
  for (int64_t r = 0; r < m.rows(); ++r)
    for (int64_t c = 0; c < m.cols(); ++c) {
      cells.push_back(entry_symbol(m.at(r, c), d));
      w = std::max(w, display_width(cells.back()));
    }
  for (int64_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (int64_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[static_cast<size_t>(r * m.cols() + c)];
      os << ' ' << std::string(w - display_width(cell), ' ') << cell;
    }
    os << " ]\n";
  }
}

std::string operator_name(int64_t d, int64_t a, int64_t b) {
  if (a == 0 && b == 0) return "I";
  if (a == 1 && b == 0) return "X";
  if (a == 0 && b == 1) return "Z";
  if (d == 2 && a == 1 && b == 1) return "Y = XZ";
  return "X^" + std::to_string(a) + " Z^" + std::to_string(b);
}

int run_pauli(int64_t d, const std::string& action) {
  if (d < 2) throw std::invalid_argument("pauli: --d must be at least 2");

  if (action == "table") {
    if (d >= 3 && d != 4) std::cout << "# ω = exp(2πi/" << d << ")\n";
    for (int64_t a = 0; a < d; ++a)
      for (int64_t b = 0; b < d; ++b) {
        std::cout << "U_";
        if (d <= 9)
          std::cout << a << b;
        else
          std::cout << a << "," << b;
        std::cout << " = " << operator_name(d, a, b) << "\n";
        print_matrix(std::cout, mubs::pauli_matrix(d, {0, a, b}), d);
      }
    return 0;
  }

  if (action == "classes") {
    const auto classes = mubs::commuting_classes(d);  // throws for composite d
    std::cout << "# d = " << d << ": " << classes.size()
              << " maximal commuting classes; shorthand ab means X^a Z^b\n";
    for (size_t k = 0; k < classes.size(); ++k) {
      std::cout << "𝒱_" << k << " = {";
      bool first = true;
      for (const auto& [a, b] : classes[k]) {
        if (!first) std::cout << ", ";
        first = false;
        if (d <= 9)
          std::cout << a << b;
        else
          std::cout << "(" << a << "," << b << ")";
      }
      std::cout << "}\n";
    }
    return 0;
  }

  // group-check
  const auto group = mubs::pauli_group(d);
  const int64_t n = static_cast<int64_t>(group.size());
  std::cout << "# P_" << d << ": labels (a, b, c) represent ω^a X^b Z^c, ω = exp(2πi/" << d
            << ")\n";
  std::cout << "elements: " << n << "\n";
  bool ok = true;

  const mubs::PauliLabel e{0, 0, 0};
  const auto index_of = [d](const mubs::PauliLabel& g) {
    return static_cast<size_t>((g.a * d + g.b) * d + g.c);
  };
  std::vector<char> member(static_cast<size_t>(n), 0);
  for (const auto& g : group) member[index_of(g)] = 1;

  bool id_inv_ok = true;
  for (const auto& g : group) {
    if (mubs::pauli_mul(d, e, g) != g || mubs::pauli_mul(d, g, e) != g) id_inv_ok = false;
    if (mubs::pauli_mul(d, g, mubs::pauli_inverse(d, g)) != e) id_inv_ok = false;
  }
  std::cout << "identity and inverses: " << (id_inv_ok ? "ok" : "FAILED") << "\n";
  ok = ok && id_inv_ok;

  bool closure_ok = true;
  const bool closure_full = n <= 2048;  // n^2 products
  if (closure_full) {
    for (const auto& g : group)
      for (const auto& h : group)
        if (!member[index_of(mubs::pauli_mul(d, g, h))]) closure_ok = false;
    std::cout << "closure: " << (closure_ok ? "ok" : "FAILED") << " (all " << n * n
              << " products)\n";
  } else {
    std::mt19937_64 gen(12345);
    std::uniform_int_distribution<size_t> pick(0, static_cast<size_t>(n - 1));
    for (int t = 0; t < 100000; ++t)
      if (!member[index_of(mubs::pauli_mul(d, group[pick(gen)], group[pick(gen)]))])
        closure_ok = false;
    std::cout << "closure: " << (closure_ok ? "ok" : "FAILED") << " (100000 sampled products)\n";
  }
  ok = ok && closure_ok;

  bool assoc_ok = true;
  const bool assoc_full = n <= 160;  // n^3 triples
  if (assoc_full) {
    for (const auto& g : group)
      for (const auto& h : group)
        for (const auto& k : group)
          if (mubs::pauli_mul(d, mubs::pauli_mul(d, g, h), k) !=
              mubs::pauli_mul(d, g, mubs::pauli_mul(d, h, k)))
            assoc_ok = false;
    std::cout << "associativity: " << (assoc_ok ? "ok" : "FAILED") << " (all " << n * n * n
              << " triples)\n";
  } else {
    std::mt19937_64 gen(54321);
    std::uniform_int_distribution<size_t> pick(0, static_cast<size_t>(n - 1));
    for (int t = 0; t < 100000; ++t) {
      const auto& g = group[pick(gen)];
      const auto& h = group[pick(gen)];
      const auto& k = group[pick(gen)];
      if (mubs::pauli_mul(d, mubs::pauli_mul(d, g, h), k) !=
          mubs::pauli_mul(d, g, mubs::pauli_mul(d, h, k)))
        assoc_ok = false;
    }
    std::cout << "associativity: " << (assoc_ok ? "ok" : "FAILED") << " (100000 sampled triples)\n";
  }
  ok = ok && assoc_ok;

  const auto comm = mubs::commutator_subgroup(d);
  bool comm_ok = static_cast<int64_t>(comm.size()) == d;
  for (const auto& g : comm)
    if (g.b != 0 || g.c != 0) comm_ok = false;
  std::cout << "commutator subgroup: {ω^a I : a = 0.." << d - 1 << "}, size " << comm.size()
            << (comm_ok ? "" : " FAILED") << "\n";
  ok = ok && comm_ok;

  if (n == d * d * d && ok)
    std::cout << "order " << n << " confirmed (= " << d << "^3)\n";
  else
    std::cout << "group check FAILED\n";
  return ok && n == d * d * d ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sim
// ---------------------------------------------------------------------------

int run_teleport(const std::string& state_csv, bool sample, uint64_t seed) {
  const auto psi = parse_qubit(state_csv);
  std::cout << "input |ψ⟩ = " << qubit_string(psi) << "\n";
  const auto branches = mubs::sim::teleport(psi);
  for (const auto& br : branches)
    std::cout << "branch (m0, m1) = (" << br.m0 << ", " << br.m1 << "): probability "
              << fmt_num(br.probability) << ", fidelity " << fmt_num(br.fidelity) << "\n";
  if (sample) {
    std::mt19937_64 gen(seed);
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    double cum = 0;
    const auto* chosen = &branches.back();
    for (const auto& br : branches) {
      cum += br.probability;
      if (u < cum) {
        chosen = &br;
        break;
      }
    }
    std::cout << "sampled branch (seed " << seed << "): (" << chosen->m0 << ", " << chosen->m1
              << ")\n";
  }
  return 0;
}

int run_dj(const std::vector<int64_t>& table) {
  for (const auto b : table)
    if (b != 0 && b != 1) throw std::invalid_argument("dj: --f entries must be bits");
  const auto res = mubs::sim::constant_or_balanced(table);
  std::cout << (res.constant ? "constant" : "balanced") << "\n";
  std::cout << "probability of all-zero input readout: " << fmt_num(res.probability_zero) << "\n";
  return 0;
}

int run_bell(int64_t x, int64_t y, int64_t shots, uint64_t seed) {
  const auto s = mubs::sim::bell(x, y);
  std::cout << "bell(" << x << ", " << y << ") = (|0" << y << "⟩ " << (x ? "-" : "+") << " |1"
            << (1 - y) << "⟩)/√2\n";
  std::cout << "concurrence: " << fmt_num(mubs::sim::concurrence(s)) << "\n";
  std::cout << "measurement of sites (0, 1):\n";
  for (const auto& br : mubs::sim::measure_enumerate(s, {0, 1}))
    std::cout << "  (" << br.outcome[0] << ", " << br.outcome[1] << "): probability "
              << fmt_num(br.probability) << "\n";
  if (shots > 0) {
    std::cout << "counts (shots = " << shots << ", seed = " << seed << "):\n";
    for (const auto& [outcome, count] : mubs::sim::measure_sampled(s, {0, 1}, shots, seed))
      std::cout << "  (" << outcome[0] << ", " << outcome[1] << "): " << count << "\n";
  }
  return 0;
}

int run_bloch(const std::string& state_csv) {
  const auto psi = parse_qubit(state_csv);
  const auto xyz = mubs::sim::bloch_coords(psi);
  std::cout << "(" << fmt_num(xyz[0]) << ", " << fmt_num(xyz[1]) << ", " << fmt_num(xyz[2])
            << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

int run_bounds(int64_t d) {
  const auto b = mubs::mub_bounds(d);  // throws for d < 2
  if (b.exact)
    std::cout << "N(" << d << ") = " << b.upper << "\n";
  else
    std::cout << b.lower << " ≤ N(" << d << ") ≤ " << b.upper << "\n";
  std::string fact;
  for (const auto& [p, e] : b.factorization) {
    if (!fact.empty()) fact += " * ";
    fact += std::to_string(p);
    if (e > 1) fact += "^" + std::to_string(e);
  }
  std::cout << "prime power: " << (b.exact ? "yes" : "no") << " (" << d << " = " << fact << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutually unbiased bases: generation, exact verification, Pauli tables, demos"};
  app.name("mubs");
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a set of bases and export it");
  gen->require_subcommand(1);
  std::string g_format = "json";
  bool g_numeric = false;
  std::string g_out;
  int64_t g_d = 0, g_p = 0, g_m = 0;
  std::vector<int64_t> g_modulus;
  const auto add_export_options = [&](CLI::App* s) {
    s->add_option("--format", g_format, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    s->add_flag("--numeric", g_numeric, "csv only: amplitudes as re,im floats");
    s->add_option("--out", g_out, "write to this file instead of stdout");
  };
  add_export_options(gen);
  auto* g_master =
      gen->add_subcommand("master", "d + 1 bases in prime dimension d over exp(2πi/(2d))");
  g_master->add_option("--d", g_d, "dimension (complete set when d is prime)")->required();
  auto* g_alt = gen->add_subcommand(
      "alternative", "p + 1 bases in odd prime dimension p over exp(2πi/p)");
  g_alt->add_option("--p", g_p, "prime dimension (fails verification for p = 2)")->required();
  auto* g_gf = gen->add_subcommand("gf", "p^m + 1 bases in dimension p^m, p an odd prime");
  g_gf->add_option("--p", g_p, "odd prime characteristic")->required();
  g_gf->add_option("--m", g_m, "extension degree")->required();
  g_gf->add_option("--modulus", g_modulus,
                   "lower coefficients c_0,...,c_{m-1} of the monic degree-m modulus "
                   "x^m + c_{m-1} x^{m-1} + ... + c_0 (must be irreducible over GF(p))")
      ->delimiter(',');
  auto* g_gr = gen->add_subcommand("gr", "2^m + 1 bases in dimension 2^m over i");
  g_gr->add_option("--m", g_m, "number of qubits")->required();
  auto* g_w4 = gen->add_subcommand("w4", "the five tensor-product bases in dimension 4");
  for (auto* s : {g_master, g_alt, g_gf, g_gr, g_w4}) add_export_options(s);

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "check orthonormality and unbiasedness claims");
  std::string v_in;
  std::vector<std::string> v_gen;
  std::string v_mode = "exact";
  double v_tol = 1e-10;
  auto* opt_in = ver->add_option("--in", v_in, "read an exported JSON set from this file");
  auto* opt_gen = ver->add_option("--gen", v_gen,
                                  "generate then verify: method and parameters, e.g. --gen gf 3 2")
                      ->expected(-1);
  opt_in->excludes(opt_gen);
  ver->add_option("--mode", v_mode, "exact (default) or float")
      ->check(CLI::IsMember({"exact", "float"}));
  ver->add_option("--tol", v_tol, "float mode tolerance (default 1e-10)")
      ->check(CLI::PositiveNumber);

  // ---- pauli ----
  auto* pl = app.add_subcommand("pauli", "discrete Pauli operators in dimension d");
  int64_t p_d = 0;
  std::string p_action;
  pl->add_option("--d", p_d, "dimension")->required();
  pl->add_option("action", p_action, "table, classes (prime d), or group-check")
      ->required()
      ->check(CLI::IsMember({"table", "classes", "group-check"}));

  // ---- sim ----
  auto* sim = app.add_subcommand("sim", "small circuit demonstrations");
  sim->require_subcommand(1);
  std::string s_state;
  bool s_sample = false;
  uint64_t s_seed = 0;
  std::vector<int64_t> s_table;
  int64_t s_x = 0, s_y = 0, s_shots = 0;
  auto* s_tel = sim->add_subcommand("teleport", "teleport a one-qubit state through a Bell pair");
  s_tel->add_option("--state", s_state, "input amplitudes a,b (normalized automatically)")
      ->required();
  s_tel->add_flag("--sample", s_sample, "also draw one measurement branch");
  s_tel->add_option("--seed", s_seed, "generator seed for --sample (default 0)");
  auto* s_dj = sim->add_subcommand("dj", "constant-vs-balanced oracle decision");
  s_dj->add_option("--f", s_table, "truth table bits, e.g. --f 0,1 (length a power of two)")
      ->required()
      ->delimiter(',');
  auto* s_bell = sim->add_subcommand("bell", "prepare a Bell state and measure it");
  s_bell->add_option("--x", s_x, "first preparation bit (default 0)");
  s_bell->add_option("--y", s_y, "second preparation bit (default 0)");
  s_bell->add_option("--shots", s_shots, "also sample this many measurements")
      ->check(CLI::NonNegativeNumber);
  s_bell->add_option("--seed", s_seed, "generator seed for --shots (default 0)");
  auto* s_bloch = sim->add_subcommand("bloch", "Bloch sphere coordinates of a one-qubit state");
  s_bloch->add_option("--state", s_state, "amplitudes a,b (normalized automatically)")->required();

  // ---- bounds ----
  auto* bnd = app.add_subcommand("bounds", "known bounds on the number of unbiased bases");
  int64_t b_d = 0;
  bnd->add_option("--d", b_d, "dimension (at least 2)")->required();

  // ---- help ----
  auto* help_cmd = app.add_subcommand("help", "print this help and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*help_cmd) {
      std::cout << app.help();
      return 0;
    }
    if (*gen) {
      mubs::MubSet set;
      if (*g_master)
        set = mubs::mub_master(g_d);
      else if (*g_alt)
        set = mubs::mub_alternative(g_p);
      else if (*g_gf)
        set = g_modulus.empty() ? mubs::mub_gf(g_p, g_m) : mubs::mub_gf(g_p, g_m, g_modulus);
      else if (*g_gr)
        set = mubs::mub_gr(g_m);
      else
        set = mubs::mub_w4();
      return run_gen(set, g_format, g_numeric, g_out);
    }
    if (*ver) {
      if (v_in.empty() && v_gen.empty())
        throw std::invalid_argument("verify: exactly one of --in or --gen is required");
      return run_verify(v_in, v_gen, v_mode, v_tol);
    }
    if (*pl) return run_pauli(p_d, p_action);
    if (*sim) {
      if (*s_tel) return run_teleport(s_state, s_sample, s_seed);
      if (*s_dj) return run_dj(s_table);
      if (*s_bell) return run_bell(s_x, s_y, s_shots, s_seed);
      return run_bloch(s_state);
    }
    return run_bounds(b_d);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
