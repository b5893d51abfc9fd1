#include "wfsim/gates.hpp"

#include <algorithm>
#include <cmath>

namespace wfsim {

namespace {

void require_unitary(const ComplexMatrix& u, const std::string& name) {
  const ComplexMatrix gram = u.adjoint() * u;
  if (gram.max_abs_diff(ComplexMatrix::identity(u.rows())) > 1e-10)
    throw input_error("gate '" + name + "': not unitary within 1e-10");
}

}  // namespace

Gate Gate::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return custom("H", ComplexMatrix(2, 2, {cd{s}, cd{s}, cd{s}, cd{-s}}), 1);
}

Gate Gate::pauli_x() {
  return custom("X", ComplexMatrix(2, 2, {cd{0}, cd{1}, cd{1}, cd{0}}), 1);
}

Gate Gate::cnot() {
  // Control first: |10> -> |11>, |11> -> |10|.
  ComplexMatrix m(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = cd{1.0};
  return custom("CNOT", std::move(m), 2);
}

Gate Gate::custom(std::string name, ComplexMatrix mat, std::size_t arity) {
  if (arity != 1 && arity != 2)
    throw input_error("gate '" + name + "': arity must be 1 or 2");
  if (!mat.is_square()) throw input_error("gate '" + name + "': not square");
  mat.require_finite("gate");
  require_unitary(mat, name);
  return Gate{std::move(name), std::move(mat), arity};
}

PureState ghz_state(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("ghz_state: p outside [0,1]");
  SubsystemLayout layout{{{"a", 2}, {"t", 2}, {"m", 2}, {"e", 2}}};
  std::vector<cd> amps(16, cd{0.0});
  amps.front() = cd{std::sqrt(p)};
  amps.back() = cd{std::sqrt(1.0 - p)};
  return PureState{std::move(layout), std::move(amps)};
}

namespace {

// Wire index bookkeeping shared by the pure and density overloads: for every
// flat basis index, the digit(s) on `wires` select the gate column, the rest
// are spectators.
struct WirePlan {
  std::vector<std::size_t> wire_pos;  // layout positions of the gate wires
  std::size_t gate_dim;
};

WirePlan plan_wires(const SubsystemLayout& layout, const Gate& gate,
                    const std::vector<std::string>& wires) {
  if (wires.size() != gate.arity)
    throw input_error("apply_unitary: gate '" + gate.name + "' expects " +
                      std::to_string(gate.arity) + " wire(s)");
  WirePlan plan;
  plan.gate_dim = 1;
  for (const auto& w : wires) {
    const std::size_t pos = layout.index_of(w);
    if (std::find(plan.wire_pos.begin(), plan.wire_pos.end(), pos) !=
        plan.wire_pos.end())
      throw input_error("apply_unitary: wire '" + w + "' repeats");
    plan.wire_pos.push_back(pos);
    plan.gate_dim *= layout.at(pos).dim;
  }
  if (plan.gate_dim != gate.mat.rows())
    throw input_error("apply_unitary: gate dimension " +
                      std::to_string(gate.mat.rows()) +
                      " does not match wires");
  return plan;
}

// Gate sub-index of a digit tuple, wires in given order (control first).
std::size_t gate_index(const std::vector<std::size_t>& digits,
                       const WirePlan& plan, const SubsystemLayout& layout) {
  std::size_t g = 0;
  for (std::size_t p : plan.wire_pos) g = g * layout.at(p).dim + digits[p];
  return g;
}

std::vector<cd> apply_to_vector(const std::vector<cd>& in,
                                const SubsystemLayout& layout,
                                const Gate& gate, const WirePlan& plan) {
  const std::size_t d = layout.total_dim();
  const std::size_t gd = plan.gate_dim;
  std::vector<cd> out(d, cd{0.0});
  for (std::size_t col = 0; col < d; ++col) {
    if (in[col] == cd{0.0}) continue;
    auto digits = layout.digits(col);
    const std::size_t gcol = gate_index(digits, plan, layout);
    for (std::size_t grow = 0; grow < gd; ++grow) {
      const cd amp = gate.mat(grow, gcol);
      if (amp == cd{0.0}) continue;
      // Scatter the gate row digits back into the wire positions.
      std::size_t rem = grow;
      for (std::size_t i = plan.wire_pos.size(); i-- > 0;) {
        const std::size_t p = plan.wire_pos[i];
        digits[p] = rem % layout.at(p).dim;
        rem /= layout.at(p).dim;
      }
      out[layout.flat(digits)] += amp * in[col];
    }
  }
  return out;
}

}  // namespace

PureState apply_unitary(const PureState& psi, const Gate& gate,
                        const std::vector<std::string>& wires) {
  validate_pure(psi);
  const WirePlan plan = plan_wires(psi.layout, gate, wires);
  return PureState{psi.layout,
                   apply_to_vector(psi.amplitudes, psi.layout, gate, plan)};
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Gate& gate,
                            const std::vector<std::string>& wires) {
  const WirePlan plan = plan_wires(rho.layout(), gate, wires);
  const std::size_t d = rho.dim();
  // U ρ U† — apply the embedded gate to the columns, then to the rows.
  ComplexMatrix tmp(d, d);
  std::vector<cd> v(d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) v[r] = rho.mat()(r, c);
    const auto uv = apply_to_vector(v, rho.layout(), gate, plan);
    for (std::size_t r = 0; r < d; ++r) tmp(r, c) = uv[r];
  }
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) v[c] = std::conj(tmp(r, c));
    const auto uv = apply_to_vector(v, rho.layout(), gate, plan);
    for (std::size_t c = 0; c < d; ++c) out(r, c) = std::conj(uv[c]);
  }
  return DensityMatrix(rho.layout(), std::move(out));
}

PureState prepare_source_circuit(double p) {
  PureState psi = ghz_state(p);
  psi = apply_unitary(psi, Gate::hadamard(), {"a"});
  psi = apply_unitary(psi, Gate::cnot(), {"a", "t"});
  // Align the all-ones branch with the (|00>-|11>)/√2 Bell form: after the
  // first CNOT that branch sits in the singlet, and flipping t conditioned
  // on m (which is |1> exactly on that branch) maps it across while leaving
  // the other branch untouched.
  psi = apply_unitary(psi, Gate::cnot(), {"m", "t"});
  return psi;
}

std::vector<MeasurementOutcome> measure_projective(
    const DensityMatrix& rho, const std::string& wire,
    const std::vector<std::vector<cd>>& basis) {
  const SubsystemLayout& layout = rho.layout();
  const std::size_t pos = layout.index_of(wire);
  const std::size_t wd = layout.at(pos).dim;
  if (basis.size() != wd)
    throw input_error("measure: basis must span the wire dimension");
  for (const auto& b : basis)
    if (b.size() != wd)
      throw input_error("measure: basis vector of wrong dimension");
  // Orthonormality of the supplied basis.
  for (std::size_t i = 0; i < wd; ++i)
    for (std::size_t j = 0; j < wd; ++j) {
      cd ip{0.0};
      for (std::size_t k = 0; k < wd; ++k)
        ip += std::conj(basis[i][k]) * basis[j][k];
      const cd want = (i == j) ? cd{1.0} : cd{0.0};
      if (std::abs(ip - want) > 1e-9)
        throw input_error("measure: basis not orthonormal");
    }

  // Post layout drops the measured wire (destructive measurement).
  std::vector<Subsystem> rest;
  for (std::size_t i = 0; i < layout.count(); ++i)
    if (i != pos) rest.push_back(layout.at(i));
  SubsystemLayout post_layout{rest};
  const std::size_t pd = post_layout.total_dim();

  std::vector<MeasurementOutcome> outcomes;
  double prob_sum = 0.0;
  for (std::size_t k = 0; k < wd; ++k) {
    // <b_k| ρ |b_k> contracted on the wire: a pd×pd operator.
    ComplexMatrix block(pd, pd);
    for (std::size_t r = 0; r < pd; ++r) {
      auto rdig = post_layout.digits(r);
      for (std::size_t c = 0; c < pd; ++c) {
        auto cdig = post_layout.digits(c);
        cd sum{0.0};
        std::vector<std::size_t> fr(layout.count()), fc(layout.count());
        for (std::size_t wi = 0; wi < wd; ++wi)
          for (std::size_t wj = 0; wj < wd; ++wj) {
            std::size_t ri = 0, ci = 0;
            for (std::size_t s = 0; s < layout.count(); ++s) {
              if (s == pos) {
                fr[s] = wi;
                fc[s] = wj;
              } else {
                fr[s] = rdig[ri++];
                fc[s] = cdig[ci++];
              }
            }
            sum += std::conj(basis[k][wi]) * basis[k][wj] *
                   rho.mat()(layout.flat(fr), layout.flat(fc));
          }
        block(r, c) = sum;
      }
    }
    const double prob = block.trace().real();
    prob_sum += prob;
    MeasurementOutcome out;
    out.outcome_index = k;
    out.probability = std::max(0.0, prob);
    out.post_state_defined = prob > 1e-12;
    if (out.post_state_defined) {
      block *= cd{1.0 / prob};
      out.post_mat = std::move(block);
      out.post_layout = post_layout;
    }
    outcomes.push_back(std::move(out));
  }
  if (std::abs(prob_sum - 1.0) > tolerances().eq)
    throw numerical_error("measure: outcome probabilities do not sum to 1");
  return outcomes;
}

}  // namespace wfsim
