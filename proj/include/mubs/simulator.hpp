#pragma once

// Small dense state-vector simulator for registers of qudits (floating
// point, unlike the exact MUB machinery).  Provides the standard qubit
// gates, controlled phases, function oracles |x, y> -> |x, y xor f(x)>,
// Bell-state preparation, teleportation with explicit measurement branches,
// the constant-vs-balanced oracle test, a no-cloning defect norm, Bloch
// coordinates, and enumerated or seeded-sampled measurements.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mubs::sim {

using cplx = std::complex<double>;

struct StateVector {
  std::vector<int64_t> dims;  // one entry per site; index of site 0 is most significant
  std::vector<cplx> amps;     // size = product of dims

  int64_t size() const { return static_cast<int64_t>(amps.size()); }

  static StateVector zero_state(std::vector<int64_t> dims) {
    StateVector s;
    s.dims = std::move(dims);
    int64_t n = 1;
    for (const auto d : s.dims) {
      if (d < 2) throw std::invalid_argument("StateVector: site dimension must be at least 2");
      n *= d;
    }
    s.amps.assign(static_cast<size_t>(n), 0.0);
    s.amps[0] = 1.0;
    return s;
  }

  static StateVector basis_state(std::vector<int64_t> dims, const std::vector<int64_t>& digits) {
    StateVector s = zero_state(std::move(dims));
    if (digits.size() != s.dims.size())
      throw std::invalid_argument("StateVector: one digit per site required");
    int64_t idx = 0;
    for (size_t i = 0; i < s.dims.size(); ++i) {
      if (digits[i] < 0 || digits[i] >= s.dims[i])
        throw std::invalid_argument("StateVector: digit out of range");
      idx = idx * s.dims[i] + digits[i];
    }
    s.amps[0] = 0.0;
    s.amps[static_cast<size_t>(idx)] = 1.0;
    return s;
  }

  static StateVector from_amplitudes(std::vector<int64_t> dims, std::vector<cplx> amps) {
    StateVector s;
    s.dims = std::move(dims);
    int64_t n = 1;
    for (const auto d : s.dims) n *= d;
    if (static_cast<int64_t>(amps.size()) != n)
      throw std::invalid_argument("StateVector: amplitude count does not match dimensions");
    s.amps = std::move(amps);
    return s;
  }

  double norm() const {
    double t = 0;
    for (const auto& a : amps) t += std::norm(a);
    return std::sqrt(t);
  }

  StateVector& normalize() {
    const double n = norm();
    if (n < 1e-300) throw std::domain_error("StateVector: cannot normalize the zero vector");
    for (auto& a : amps) a /= n;
    return *this;
  }
};

inline StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out;
  out.dims = a.dims;
  out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
  out.amps.resize(a.amps.size() * b.amps.size());
  for (size_t i = 0; i < a.amps.size(); ++i)
    for (size_t j = 0; j < b.amps.size(); ++j)
      out.amps[i * b.amps.size() + j] = a.amps[i] * b.amps[j];
  return out;
}

inline cplx inner(const StateVector& a, const StateVector& b) {
  if (a.amps.size() != b.amps.size())
    throw std::invalid_argument("inner: states have different sizes");
  cplx s = 0;
  for (size_t i = 0; i < a.amps.size(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
  return s;
}

inline double distance(const StateVector& a, const StateVector& b) {
  if (a.amps.size() != b.amps.size())
    throw std::invalid_argument("distance: states have different sizes");
  double t = 0;
  for (size_t i = 0; i < a.amps.size(); ++i) t += std::norm(a.amps[i] - b.amps[i]);
  return std::sqrt(t);
}

struct Gate {
  std::vector<int64_t> dims;  // site dimensions the gate acts on
  std::vector<cplx> mat;      // row-major, size = (prod dims)^2

  int64_t dim() const {
    int64_t n = 1;
    for (const auto d : dims) n *= d;
    return n;
  }

  static Gate from_matrix(std::vector<int64_t> dims, std::vector<cplx> mat) {
    Gate g;
    g.dims = std::move(dims);
    g.mat = std::move(mat);
    const int64_t n = g.dim();
    if (static_cast<int64_t>(g.mat.size()) != n * n)
      throw std::invalid_argument("Gate: matrix size does not match dimensions");
    return g;
  }
};

inline Gate gate_identity() { return Gate::from_matrix({2}, {1, 0, 0, 1}); }
inline Gate gate_not() { return Gate::from_matrix({2}, {0, 1, 1, 0}); }
inline Gate gate_y() { return Gate::from_matrix({2}, {0, cplx(0, -1), cplx(0, 1), 0}); }
inline Gate gate_z() { return Gate::from_matrix({2}, {1, 0, 0, -1}); }

// diag(1, e^{i theta})
inline Gate gate_phase(double theta) {
  return Gate::from_matrix({2}, {1, 0, 0, std::polar(1.0, theta)});
}

inline Gate gate_h() {
  const double s = 1.0 / std::numbers::sqrt2;
  return Gate::from_matrix({2}, {s, s, s, -s});
}

inline Gate gate_cnot() {
  return Gate::from_matrix({2, 2}, {1, 0, 0, 0,  //
                                    0, 1, 0, 0,  //
                                    0, 0, 0, 1,  //
                                    0, 0, 1, 0});
}

// diag(1, 1, 1, e^{i theta})
inline Gate gate_cp(double theta) {
  Gate g = Gate::from_matrix({2, 2}, std::vector<cplx>(16, 0.0));
  g.mat[0] = g.mat[5] = g.mat[10] = 1.0;
  g.mat[15] = std::polar(1.0, theta);
  return g;
}

// |x, y> -> |x, y xor f(x)> for a boolean truth table of length 2^n.
inline Gate gate_uf(const std::vector<int64_t>& truth_table) {
  const size_t len = truth_table.size();
  int64_t n = 0;
  while ((size_t{1} << n) < len) ++n;
  if ((size_t{1} << n) != len || len < 2)
    throw std::invalid_argument("gate_uf: truth table length must be a power of two, at least 2");
  for (const auto b : truth_table)
    if (b != 0 && b != 1) throw std::invalid_argument("gate_uf: truth table entries must be bits");
  std::vector<int64_t> dims(static_cast<size_t>(n) + 1, 2);
  const int64_t size = int64_t{1} << (n + 1);
  std::vector<cplx> mat(static_cast<size_t>(size * size), 0.0);
  for (int64_t x = 0; x < static_cast<int64_t>(len); ++x)
    for (int64_t y = 0; y < 2; ++y) {
      const int64_t in = 2 * x + y;
      const int64_t out = 2 * x + (y ^ truth_table[static_cast<size_t>(x)]);
      mat[static_cast<size_t>(out * size + in)] = 1.0;
    }
  return Gate::from_matrix(std::move(dims), std::move(mat));
}

// Apply a gate to the given sites (distinct, each matching the gate's
// dimensions).
inline StateVector apply(const StateVector& state, const Gate& gate,
                         const std::vector<int64_t>& sites) {
  if (sites.size() != gate.dims.size())
    throw std::invalid_argument("apply: one target site per gate factor required");
  const int64_t nsites = static_cast<int64_t>(state.dims.size());
  for (size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 0 || sites[i] >= nsites) throw std::invalid_argument("apply: site out of range");
    if (state.dims[static_cast<size_t>(sites[i])] != gate.dims[i])
      throw std::invalid_argument("apply: gate dimension does not match site dimension");
    for (size_t j = i + 1; j < sites.size(); ++j)
      if (sites[i] == sites[j]) throw std::invalid_argument("apply: repeated site");
  }

  std::vector<int64_t> strides(static_cast<size_t>(nsites));
  int64_t acc = 1;
  for (int64_t i = nsites - 1; i >= 0; --i) {
    strides[static_cast<size_t>(i)] = acc;
    acc *= state.dims[static_cast<size_t>(i)];
  }

  const int64_t k = gate.dim();
  // offsets[c] = global index offset of target-digit combination c
  std::vector<int64_t> offsets(static_cast<size_t>(k), 0);
  for (int64_t c = 0; c < k; ++c) {
    int64_t rest = c;
    for (int64_t f = static_cast<int64_t>(sites.size()) - 1; f >= 0; --f) {
      const int64_t d = gate.dims[static_cast<size_t>(f)];
      offsets[static_cast<size_t>(c)] += (rest % d) * strides[static_cast<size_t>(sites[f])];
      rest /= d;
    }
  }

  StateVector out = state;
  std::vector<cplx> in(static_cast<size_t>(k));
  for (int64_t base = 0; base < state.size(); ++base) {
    // visit each index once: only those whose target digits are all zero
    bool is_base = true;
    for (const auto site : sites) {
      const int64_t digit =
          (base / strides[static_cast<size_t>(site)]) % state.dims[static_cast<size_t>(site)];
      if (digit != 0) {
        is_base = false;
        break;
      }
    }
    if (!is_base) continue;
    for (int64_t c = 0; c < k; ++c)
      in[static_cast<size_t>(c)] = state.amps[static_cast<size_t>(base + offsets[c])];
    for (int64_t r = 0; r < k; ++r) {
      cplx s = 0;
      for (int64_t c = 0; c < k; ++c) s += gate.mat[static_cast<size_t>(r * k + c)] * in[static_cast<size_t>(c)];
      out.amps[static_cast<size_t>(base + offsets[r])] = s;
    }
  }
  return out;
}

struct MeasurementBranch {
  std::vector<int64_t> outcome;  // one digit per measured site
  double probability = 0;
  StateVector post;  // collapsed, renormalized full register
};

// All measurement branches of the given sites with probability >= 1e-12.
inline std::vector<MeasurementBranch> measure_enumerate(const StateVector& state,
                                                        const std::vector<int64_t>& sites) {
  const int64_t nsites = static_cast<int64_t>(state.dims.size());
  for (const auto s : sites)
    if (s < 0 || s >= nsites) throw std::invalid_argument("measure: site out of range");

  std::vector<int64_t> strides(static_cast<size_t>(nsites));
  int64_t acc = 1;
  for (int64_t i = nsites - 1; i >= 0; --i) {
    strides[static_cast<size_t>(i)] = acc;
    acc *= state.dims[static_cast<size_t>(i)];
  }

  int64_t outcomes = 1;
  for (const auto s : sites) outcomes *= state.dims[static_cast<size_t>(s)];

  std::vector<MeasurementBranch> branches;
  for (int64_t o = 0; o < outcomes; ++o) {
    std::vector<int64_t> digits(sites.size());
    int64_t rest = o;
    for (int64_t f = static_cast<int64_t>(sites.size()) - 1; f >= 0; --f) {
      const int64_t d = state.dims[static_cast<size_t>(sites[static_cast<size_t>(f)])];
      digits[static_cast<size_t>(f)] = rest % d;
      rest /= d;
    }
    MeasurementBranch br;
    br.outcome = digits;
    br.post = state;
    double p = 0;
    for (int64_t idx = 0; idx < state.size(); ++idx) {
      bool match = true;
      for (size_t f = 0; f < sites.size(); ++f) {
        const int64_t site = sites[f];
        const int64_t digit =
            (idx / strides[static_cast<size_t>(site)]) % state.dims[static_cast<size_t>(site)];
        if (digit != digits[f]) {
          match = false;
          break;
        }
      }
      if (match) {
        p += std::norm(state.amps[static_cast<size_t>(idx)]);
      } else {
        br.post.amps[static_cast<size_t>(idx)] = 0.0;
      }
    }
    if (p < 1e-12) continue;
    br.probability = p;
    const double scale = 1.0 / std::sqrt(p);
    for (auto& a : br.post.amps) a *= scale;
    branches.push_back(std::move(br));
  }
  return branches;
}

// Draw `shots` outcomes for the given sites with a deterministic seeded
// generator; returns counts keyed by outcome digits.
inline std::map<std::vector<int64_t>, int64_t> measure_sampled(const StateVector& state,
                                                               const std::vector<int64_t>& sites,
                                                               int64_t shots, uint64_t seed) {
  const auto branches = measure_enumerate(state, sites);
  if (branches.empty()) throw std::domain_error("measure_sampled: no branch has nonzero probability");
  std::mt19937_64 gen(seed);
  std::map<std::vector<int64_t>, int64_t> counts;
  for (int64_t s = 0; s < shots; ++s) {
    // uniform double in [0, 1) built directly from the generator so results
    // do not depend on library distribution internals
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    double cum = 0;
    const MeasurementBranch* chosen = &branches.back();
    for (const auto& br : branches) {
      cum += br.probability;
      if (u < cum) {
        chosen = &br;
        break;
      }
    }
    ++counts[chosen->outcome];
  }
  return counts;
}

// Bell state CNOT (H tensor I) |x y>: (|0 y> + (-1)^x |1, 1-y>)/sqrt(2).
inline StateVector bell(int64_t x, int64_t y) {
  if ((x != 0 && x != 1) || (y != 0 && y != 1))
    throw std::invalid_argument("bell: x and y must be bits");
  StateVector s = StateVector::basis_state({2, 2}, {x, y});
  s = apply(s, gate_h(), {0});
  s = apply(s, gate_cnot(), {0, 1});
  return s;
}

// |det| of the 2x2 amplitude matrix of a two-qubit state; 0 for product
// states, maximal (1/2) for Bell states.
inline double concurrence(const StateVector& state) {
  if (state.dims != std::vector<int64_t>{2, 2})
    throw std::invalid_argument("concurrence: expected a two-qubit state");
  return std::abs(state.amps[0] * state.amps[3] - state.amps[1] * state.amps[2]);
}

// || CNOT(psi tensor |0>) - psi tensor psi ||: zero exactly when psi is a
// pole state |0> or |1>, maximal on the equator.
inline double cloning_defect(const StateVector& psi) {
  if (psi.dims != std::vector<int64_t>{2})
    throw std::invalid_argument("cloning_defect: expected a one-qubit state");
  StateVector copied = apply(tensor(psi, StateVector::zero_state({2})), gate_cnot(), {0, 1});
  return distance(copied, tensor(psi, psi));
}

// Bloch coordinates (sin th cos ph, sin th sin ph, cos th) of a qubit state.
inline std::array<double, 3> bloch_coords(const StateVector& psi) {
  if (psi.dims != std::vector<int64_t>{2})
    throw std::invalid_argument("bloch_coords: expected a one-qubit state");
  const cplx cross = std::conj(psi.amps[0]) * psi.amps[1];
  return {2 * cross.real(), 2 * cross.imag(),
          std::norm(psi.amps[0]) - std::norm(psi.amps[1])};
}

struct TeleportBranch {
  int64_t m0 = 0;  // measurement of the input qubit
  int64_t m1 = 0;  // measurement of the shared qubit kept by the sender
  double probability = 0;
  StateVector bob;  // receiver's qubit after the Z^{m0} X^{m1} correction
  double fidelity = 0;
};

// Teleport a single-qubit state through a shared Bell pair; the four
// branches appear with probability 1/4 each and fidelity 1 after correction.
inline std::vector<TeleportBranch> teleport(const StateVector& psi) {
  if (psi.dims != std::vector<int64_t>{2})
    throw std::invalid_argument("teleport: expected a one-qubit state");
  StateVector reg = tensor(psi, bell(0, 0));
  reg = apply(reg, gate_cnot(), {0, 1});
  reg = apply(reg, gate_h(), {0});

  std::vector<TeleportBranch> out;
  for (const auto& br : measure_enumerate(reg, {0, 1})) {
    TeleportBranch tb;
    tb.m0 = br.outcome[0];
    tb.m1 = br.outcome[1];
    tb.probability = br.probability;
    // receiver's amplitudes sit in the slice (m0, m1, .)
    const int64_t base = 4 * tb.m0 + 2 * tb.m1;
    StateVector bob = StateVector::from_amplitudes(
        {2}, {br.post.amps[static_cast<size_t>(base)], br.post.amps[static_cast<size_t>(base + 1)]});
    if (tb.m1) bob = apply(bob, gate_not(), {0});
    if (tb.m0) bob = apply(bob, gate_z(), {0});
    tb.bob = std::move(bob);
    tb.fidelity = std::abs(inner(psi, tb.bob));
    out.push_back(std::move(tb));
  }
  return out;
}

struct OracleTestResult {
  bool constant = false;          // reported answer
  double probability_zero = 0;    // probability that every input qubit reads 0
};

// Constant-vs-balanced decision for a promised boolean function given as a
// truth table of length 2^n: prepare |0...0>|1>, apply H everywhere, the
// oracle, H on the inputs, and read the inputs.  All-zero means constant.
inline OracleTestResult constant_or_balanced(const std::vector<int64_t>& truth_table) {
  int64_t ones = 0;
  for (const auto b : truth_table) ones += b;
  if (ones != 0 && ones != static_cast<int64_t>(truth_table.size()) &&
      2 * ones != static_cast<int64_t>(truth_table.size()))
    throw std::invalid_argument("constant_or_balanced: table is neither constant nor balanced");
  const Gate uf = gate_uf(truth_table);
  const int64_t n = static_cast<int64_t>(uf.dims.size()) - 1;

  std::vector<int64_t> digits(static_cast<size_t>(n) + 1, 0);
  digits.back() = 1;  // ancilla |1>
  StateVector reg = StateVector::basis_state(uf.dims, digits);
  for (int64_t q = 0; q <= n; ++q) reg = apply(reg, gate_h(), {q});
  std::vector<int64_t> all_sites(static_cast<size_t>(n) + 1);
  for (int64_t q = 0; q <= n; ++q) all_sites[static_cast<size_t>(q)] = q;
  reg = apply(reg, uf, all_sites);
  for (int64_t q = 0; q < n; ++q) reg = apply(reg, gate_h(), {q});

  std::vector<int64_t> inputs(all_sites.begin(), all_sites.end() - 1);
  double p_zero = 0;
  for (const auto& br : measure_enumerate(reg, inputs)) {
    bool zero = true;
    for (const auto d : br.outcome) zero = zero && d == 0;
    if (zero) p_zero = br.probability;
  }
  OracleTestResult res;
  res.probability_zero = p_zero;
  res.constant = p_zero > 0.5;
  return res;
}

}  // namespace mubs::sim
