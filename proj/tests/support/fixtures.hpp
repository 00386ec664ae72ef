#pragma once

#include <string_view>

#include "dsmfuse/atom_frame.hpp"
#include "dsmfuse/belief.hpp"
#include "dsmfuse/lattice.hpp"

namespace fixtures {

/// "p&b | f" on the given frame; "{}" is ∅.
dsmfuse::Proposition prop(const dsmfuse::Frame& frame, std::string_view text);

/// Frame (p, b, f, nf) with f ∩ nf = ∅.
dsmfuse::Model tp2_model();

/// Axes (f|nf, b|nb, p|np) and the literal map for p, b, f, nf.
dsmfuse::AtomFrame tp2_atoms();
dsmfuse::LiteralMap tp2_literals();

/// Conditional BBAs of p→nf, b→f, p→b on the hyper-power set.
dsmfuse::Bba tp2_m1(double eps1);
dsmfuse::Bba tp2_m2(double eps2);
dsmfuse::Bba tp2_m3(double eps3);

/// Same rules refined onto the 8-atom Shafer frame.
dsmfuse::Bba tp2_atom_m1(double eps1);
dsmfuse::Bba tp2_atom_m2(double eps2);
dsmfuse::Bba tp2_atom_m3(double eps3);

/// ε₁ + ε₂ − ε₁ε₂
double k12(double eps1, double eps2);

}  // namespace fixtures
