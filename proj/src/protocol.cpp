#include "wfsim/protocol.hpp"

#include <cmath>

#include "wfsim/gates.hpp"

namespace wfsim {

namespace {

// Bell projectors (|00>±|11>)/√2 on two qubits.
ComplexMatrix bell_projector(double sign) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cd> v(4, cd{0.0});
  v[0] = cd{s};
  v[3] = cd{sign * s};
  return outer(v, v);
}

ComplexMatrix basis_projector(std::size_t dim, std::size_t i) {
  ComplexMatrix p(dim, dim);
  p(i, i) = cd{1.0};
  return p;
}

}  // namespace

DensityMatrix alice_lab_state(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("alice_lab_state: p outside [0,1]");
  SubsystemLayout layout{{{"a", 2}, {"t", 2}, {"m", 2}}};
  ComplexMatrix mat =
      cd{p} * kron(bell_projector(+1.0), basis_projector(2, 0)) +
      cd{1.0 - p} * kron(bell_projector(-1.0), basis_projector(2, 1));
  return DensityMatrix(std::move(layout), std::move(mat));
}

std::pair<ComplexMatrix, ComplexMatrix> alice_state_pair(
    std::size_t d_A, double epsilon, const KrausChannel& channel) {
  if (channel.dim != d_A)
    throw input_error("alice_state_pair: channel dimension mismatch");
  const MemoryPair mp = memory_pair(epsilon, d_A);
  ComplexMatrix tau =
      apply_channel_raw(outer(mp.xi.amplitudes, mp.xi.amplitudes), channel);
  ComplexMatrix ups = apply_channel_raw(
      outer(mp.zeta.amplitudes, mp.zeta.amplitudes), channel);
  return {std::move(tau), std::move(ups)};
}

DensityMatrix wigner_state(double p, const ComplexMatrix& tau,
                           const ComplexMatrix& upsilon) {
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("wigner_state: p outside [0,1]");
  if (tau.rows() != upsilon.rows() || !tau.is_square() || !upsilon.is_square())
    throw input_error("wigner_state: memory dimension mismatch");
  const std::size_t d_A = tau.rows();
  if (d_A < 2) throw input_error("wigner_state: memory dimension < 2");
  SubsystemLayout layout{{{"a", 2}, {"t", 2}, {"A", d_A}}};
  ComplexMatrix mat = cd{p} * kron(bell_projector(+1.0), tau) +
                      cd{1.0 - p} * kron(bell_projector(-1.0), upsilon);
  return DensityMatrix(std::move(layout), std::move(mat));
}

namespace {

// Qubit-pair block (r,c) of an [a,t,A] matrix, each block d_A×d_A; r and c
// run over the two-qubit basis 00,01,10,11.
ComplexMatrix qubit_block(const ComplexMatrix& mat, std::size_t d_A,
                          std::size_t r, std::size_t c) {
  ComplexMatrix out(d_A, d_A);
  for (std::size_t i = 0; i < d_A; ++i)
    for (std::size_t j = 0; j < d_A; ++j)
      out(i, j) = mat(r * d_A + i, c * d_A + j);
  return out;
}

const char* block_name(std::size_t idx) {
  static const char* names[4] = {"00", "01", "10", "11"};
  return names[idx];
}

}  // namespace

PrivateBlocks private_blocks(const DensityMatrix& rho) {
  const SubsystemLayout& layout = rho.layout();
  if (layout.count() != 3 || layout.at(0).label != "a" ||
      layout.at(1).label != "t" || layout.at(0).dim != 2 ||
      layout.at(1).dim != 2)
    throw input_error("private_blocks: expected layout [a,t,<memory>]");
  const std::size_t d_A = layout.at(2).dim;

  // The middle qubit-pair rows/columns must vanish.
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool middle = (r == 1 || r == 2 || c == 1 || c == 2);
      if (!middle) continue;
      if (qubit_block(rho.mat(), d_A, r, c).max_abs() > 1e-10)
        throw input_error(std::string("private_blocks: block (") +
                          block_name(r) + "," + block_name(c) +
                          ") does not vanish");
    }

  PrivateBlocks blocks{qubit_block(rho.mat(), d_A, 0, 0),
                       qubit_block(rho.mat(), d_A, 0, 3)};

  // Reassembly: [[ξ,0,0,ζ],[0,0,0,0],[0,0,0,0],[ζ†,0,0,ξ]] must reproduce
  // the input entrywise, which also pins the equal corner blocks.
  ComplexMatrix re(4 * d_A, 4 * d_A);
  const ComplexMatrix zdag = blocks.zeta_block.adjoint();
  for (std::size_t i = 0; i < d_A; ++i)
    for (std::size_t j = 0; j < d_A; ++j) {
      re(i, j) = blocks.xi_block(i, j);
      re(3 * d_A + i, 3 * d_A + j) = blocks.xi_block(i, j);
      re(i, 3 * d_A + j) = blocks.zeta_block(i, j);
      re(3 * d_A + i, j) = zdag(i, j);
    }
  if (re.max_abs_diff(rho.mat()) > 1e-12)
    throw input_error(
        "private_blocks: corner blocks do not reassemble the state");
  return blocks;
}

double key_security(const DensityMatrix& rho) {
  const PrivateBlocks blocks = private_blocks(rho);
  const double value = schatten1(blocks.zeta_block);
  const double neg = negativity(rho, "a|tA");
  if (std::abs(value - neg) > tolerances().eq)
    throw numerical_error(
        "key_security: block norm and negativity disagree beyond tolerance");
  return value;
}

double semiclassical_bound(const ComplexMatrix& tau,
                           const ComplexMatrix& upsilon, const POVM& povm) {
  const double bound = 0.5 * povm_classical_distance(tau, upsilon, povm);
  // No outcome statistics can beat the optimal measurement, so the
  // semi-classical value can never exceed the true security level
  // ½·trace_distance.
  if (bound > 0.5 * trace_distance(tau, upsilon) + tolerances().eq)
    throw numerical_error(
        "semiclassical_bound: exceeded the optimal-measurement value");
  return bound;
}

double traced_negativity(double p, const ComplexMatrix& tau,
                         const ComplexMatrix& upsilon) {
  const DensityMatrix w = wigner_state(p, tau, upsilon);
  const DensityMatrix at = partial_trace(w, {"a", "t"});
  const double value = negativity(at, "a|t");
  if (std::abs(value - std::abs(0.5 - p)) > 1e-10)
    throw numerical_error(
        "traced_negativity: deviates from the |1/2 - p| closed form");
  return value;
}

double traced_negativity(double p) {
  const MemoryPair mp = memory_pair(0.0, 2);
  return traced_negativity(
      p, outer(mp.xi.amplitudes, mp.xi.amplitudes),
      outer(mp.zeta.amplitudes, mp.zeta.amplitudes));
}

namespace {

void validate_instance(const Theorem1Instance& inst) {
  if (inst.members.size() < 2)
    throw input_error("theorem1: need at least two members");
  if (inst.dim_x < 2 || inst.dim_y < 2 || inst.dim_z < 2)
    throw input_error("theorem1: dimensions must be >= 2");
  double wsum = 0.0;
  for (const auto& m : inst.members) {
    if (m.weight <= 0.0) throw input_error("theorem1: nonpositive weight");
    wsum += m.weight;
    if (m.pair_state.rows() != inst.dim_x * inst.dim_y ||
        !m.pair_state.is_square())
      throw input_error("theorem1: pair state dimension mismatch");
    if (m.shield.rows() != inst.dim_z || !m.shield.is_square())
      throw input_error("theorem1: shield dimension mismatch");
  }
  if (std::abs(wsum - 1.0) > 1e-10)
    throw input_error("theorem1: weights must sum to 1 within 1e-10");
}

bool is_pure(const ComplexMatrix& s) {
  const cd purity = (s * s).trace();
  return std::abs(purity.real() - 1.0) < 1e-9;
}

}  // namespace

Theorem1Report theorem1_bounds(const Theorem1Instance& inst,
                               const Bipartition& bip_assisted,
                               const Bipartition& bip_pair) {
  validate_instance(inst);
  const std::string assisted = format_bipartition(bip_assisted);
  if (assisted != "XZ|Y" && assisted != "X|YZ")
    throw input_error(
        "theorem1: assisted bipartition must be 'XZ|Y' or 'X|YZ'");
  if (format_bipartition(bip_pair) != "X|Y")
    throw input_error("theorem1: pair bipartition must be 'X|Y'");

  SubsystemLayout xyz{
      {{"X", inst.dim_x}, {"Y", inst.dim_y}, {"Z", inst.dim_z}}};
  SubsystemLayout xy{{{"X", inst.dim_x}, {"Y", inst.dim_y}}};
  SubsystemLayout xy_z{{{"XY", inst.dim_x * inst.dim_y}, {"Z", inst.dim_z}}};

  // Assemble ρ_XYZ = Σ w_i σ_XY;i ⊗ σ_Z;i (validating members on the way).
  ComplexMatrix full(xyz.total_dim(), xyz.total_dim());
  std::vector<ComplexMatrix> shields;
  Theorem1Report rep;
  for (const auto& m : inst.members) {
    DensityMatrix pair_dm(xy, m.pair_state);  // validates the member
    DensityMatrix shield_dm(SubsystemLayout{{{"Z", inst.dim_z}}}, m.shield);
    full += cd{m.weight} * kron(m.pair_state, m.shield);
    shields.push_back(m.shield);
    rep.upper += m.weight * negativity(pair_dm, "X|Y");
  }
  DensityMatrix rho(xyz, std::move(full));

  rep.value_xz_y = negativity(rho, "XZ|Y");
  rep.value_x_yz = negativity(rho, "X|YZ");
  rep.shields_disjoint = supports_disjoint(shields);

  // Distinguishing probability q_i for the lower bound: certain for
  // disjoint supports; the two-state unambiguous-discrimination rate
  // 1−|<ψ₁|ψ₂>| for exactly two pure, equally weighted shields; otherwise 0
  // (the bound degrades but remains valid).
  double q = 0.0;
  if (rep.shields_disjoint) {
    q = 1.0;
  } else if (inst.members.size() == 2 &&
             std::abs(inst.members[0].weight - inst.members[1].weight) <
                 1e-10 &&
             is_pure(shields[0]) && is_pure(shields[1])) {
    const double overlap_sq =
        std::max(0.0, (shields[0] * shields[1]).trace().real());
    q = 1.0 - std::sqrt(overlap_sq);
  }
  for (const auto& m : inst.members) {
    DensityMatrix pair_dm(xy, m.pair_state);
    rep.lower = std::max(rep.lower, m.weight * q * negativity(pair_dm, "X|Y"));
  }

  const double tol = tolerances().eq;
  rep.sandwich_ok = rep.lower - tol <= rep.value_xz_y &&
                    rep.value_xz_y <= rep.upper + tol &&
                    rep.lower - tol <= rep.value_x_yz &&
                    rep.value_x_yz <= rep.upper + tol;
  rep.equality_gap = std::abs(rep.value_xz_y - rep.value_x_yz);
  rep.equality_ok = rep.equality_gap <= tol;
  if (rep.shields_disjoint)
    rep.saturation_ok = std::abs(rep.value_xz_y - rep.upper) <= tol &&
                        std::abs(rep.value_x_yz - rep.upper) <= tol;
  return rep;
}

Theorem1Report theorem1_bounds(const Theorem1Instance& inst) {
  SubsystemLayout xyz{
      {{"X", inst.dim_x}, {"Y", inst.dim_y}, {"Z", inst.dim_z}}};
  return theorem1_bounds(inst, parse_bipartition("XZ|Y", xyz),
                         parse_bipartition("X|Y", SubsystemLayout{{{"X", inst.dim_x}, {"Y", inst.dim_y}}}));
}

}  // namespace wfsim
