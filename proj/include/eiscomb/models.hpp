#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "eiscomb/field_model.hpp"

namespace eiscomb::models {

// Hom(F,C) = {eta, etabar}; the layer (when requested) is F1 = F.
FieldModel imaginary_quadratic(bool with_layer = true);

// Galois closure of a non-Galois cubic: labels indexed by S3 in the order
// e, (12), (23), (13), (123), (132); the three conjugations are left
// multiplication by (23), (12), (13). The optional layer is the quadratic
// subfield: even permutations over "nu", odd over "nubar".
FieldModel s3_model(bool with_layer = true);
std::vector<GaloisElement> s3_galois();
// Composition in S3 on the label strings above, right-to-left.
std::string s3_multiply(const std::string& a, const std::string& b);

// TR-type model: `places` real subfield labels, each with a fiber of
// 2*k1 embeddings paired by the distinguished conjugation. For k1 >= 2 two
// more conjugations pair embeddings across the fiber, which is what forces
// strongly pure weights to be base change. k1 = 1 is not realisable by a field.
FieldModel tr_model(int places = 3, int k1 = 2);

// CM-type model with `r1` subfield places and fibers of size k. Embedding
// order and the distinguished conjugation are randomised.
FieldModel random_layered_cm(int r1, int k, std::mt19937_64& rng);

// All permutations of the embeddings that send fibers to fibers and whose
// induced map on subfield labels commutes with the subfield conjugation.
// Stops after `limit` elements.
std::vector<GaloisElement> fiber_compatible_permutations(const FieldModel& m, std::size_t limit = 1000000);
GaloisElement random_fiber_compatible(const FieldModel& m, std::mt19937_64& rng);

}  // namespace eiscomb::models
