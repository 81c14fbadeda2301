#pragma once

#include <vector>

#include "mqs/circuit.hpp"
#include "mqs/operators.hpp"

namespace mqs {

/// Circuit for exp(-i theta 2^{m-1} I_{k1 z} ... I_{km z}).
/// m = 1 emits one z rotation, m = 2 one coupling gate; larger m uses the
/// basis-change recursion peeling the last index, 6(m-2)+1 gates total.
Circuit synth_multibody_zz(const std::vector<int>& indices, double theta, int n);

/// Zero-quantum swap V_kl(theta) = exp(-i theta I_kx I_ly) exp(i theta I_ky I_lx).
/// Each factor is a coupling gate in a single-spin basis-change sandwich;
/// at theta = pi the conjugation exchanges I_kz and I_lz.
Circuit synth_zero_quantum(int k, int l, double theta, int n);

struct NormalizedSelective {
  Circuit pre;
  SelectiveGate canonical;  // on qubits 1..m, labels all 0
  Circuit post;

  Circuit as_circuit() const;
};

/// Rewrites a selective rotation over an arbitrary subset/label pattern as
/// pre * canonical * post, where pre uses at most m zero-quantum swaps and
/// m pi x-pulses.
NormalizedSelective normalize_selective(const std::vector<int>& subset,
                                        const std::vector<int>& labels,
                                        double theta, int n);

/// Circuit for exp(-i theta term) where the term is one of the three basic
/// product-operator classes (transverse spins, projectors, or both, padded
/// with identities). Single-spin rotations bring every factor to the z
/// frame; a transverse chain collapses onto its first index; the diagonal
/// residue is one or two selective gates (or a multibody-zz circuit when no
/// projector is present). Requires a real coefficient.
Circuit synth_basic_unitary(const ProductTerm& term, double theta, int n);

}  // namespace mqs
