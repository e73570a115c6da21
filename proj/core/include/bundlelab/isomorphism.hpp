#pragma once

#include <optional>
#include <utility>

#include "bundlelab/witness.hpp"

namespace bundlelab {

// Normalization of a representation bundle to b1 = 0 through
// F = (z, z1 - b1 z z2, z2).
std::pair<Rank2Bundle, IsoWitness> normalize(const Rank2Bundle& e);

// Same reduced tau required; different variants give nullopt.
std::optional<IsoWitness> bundles_isomorphic(const Rank2Bundle& e, const Rank2Bundle& f);

// Witness from the total space of e to that of f, through modular reduction.
std::optional<IsoWitness> total_spaces_biholomorphic(const Rank2Bundle& e, const Rank2Bundle& f);

// Witness for the transport of e to the bundle over M tau.
IsoWitness transport_witness(const Rank2Bundle& e, const ModularMatrix& m);

bool admits_flat_kahler(const Rank2Bundle& e);

enum class BiFamily { None, ZkSymmetric, Rotational };

struct BiNonnegResult {
  bool admits = false;
  BiFamily family = BiFamily::None;
  long k = 0;  // ZkSymmetric only
};

BiNonnegResult admits_bi_nonneg(const LineBundleAH& l);

}  // namespace bundlelab
