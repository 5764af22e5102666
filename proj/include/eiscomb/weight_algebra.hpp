#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eiscomb/field_model.hpp"

namespace eiscomb {

using Rational = boost::multiprecision::cpp_rational;
using Tuple = std::vector<std::int64_t>;

// One b-coordinate n-tuple per embedding, indexed like FieldModel::embeddings.
struct Weight {
  int n = 0;
  std::vector<Tuple> comp;

  std::size_t degree() const { return comp.size(); }
  friend bool operator==(const Weight&, const Weight&) = default;
};

// Constant weight: the same tuple at every embedding.
Weight constant_weight(std::size_t degree, const Tuple& b);

struct ACoords {
  std::vector<std::int64_t> a;  // a_1..a_{n-1}
  Rational d;
};

std::vector<ACoords> b_to_a(const Weight& w);
// Inverse of b_to_a; throws when d does not give integral b.
Weight a_to_b(const std::vector<ACoords>& a, int n);

bool is_dominant(const Tuple& b);
bool is_dominant(const Weight& w);

std::optional<std::int64_t> purity_weight(const Weight& w, const IndexMap& c);
std::optional<std::int64_t> is_strongly_pure(const Weight& w, const FieldModel& m);
// d^tau + d^{c(tau)} constant for every supplied conjugation.
bool is_algebraic(const Weight& w, const FieldModel& m);
// Throws when the model has no subfield layer.
bool is_base_change(const Weight& w, const FieldModel& m);

Tuple dual(const Tuple& b);
Weight dual(const Weight& w);
Weight tate_twist(const Weight& w, std::int64_t m);
// Throws "model mismatch" when the degrees differ.
Weight concat(const Weight& w, const Weight& wp);

// Pure weight determined by its values at the distinguished members of each
// place: b^{c0(eta)}_j = pw - b^eta_{n+1-j}.
Weight pure_from_distinguished(const FieldModel& m, const std::vector<Tuple>& at_places, std::int64_t pw);

}  // namespace eiscomb
