#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eiscomb {

// 0-based index maps on {0..d-1}; map[i] is the image of i.
using IndexMap = std::vector<int>;

bool is_bijection(const IndexMap& p);
IndexMap inverse(const IndexMap& p);
// (a*b)(i) = a(b(i))
IndexMap compose(const IndexMap& a, const IndexMap& b);
IndexMap identity_map(std::size_t d);
int sign(const IndexMap& p);  // +1 or -1; p must be a bijection

struct SubfieldLayer {
  std::vector<std::string> labels;
  IndexMap restriction;   // embedding -> subfield label
  IndexMap conjugation;   // involution on subfield labels
};

struct FieldModel {
  std::vector<std::string> embeddings;
  std::vector<IndexMap> conjugations;
  std::size_t distinguished_conjugation = 0;
  std::optional<SubfieldLayer> layer;
  // One flag per embedding; exactly one member of each place is flagged.
  std::vector<bool> distinguished;

  std::size_t degree() const { return embeddings.size(); }
  const IndexMap& c0() const { return conjugations.at(distinguished_conjugation); }
  int index_of(std::string_view label) const;  // throws on unknown label
};

// Fills `distinguished` when empty. With a CM layer the flagged embeddings are
// the fibers over the first-listed member of each subfield pair; otherwise the
// first-listed member of each place.
void assign_default_flags(FieldModel& m);

struct Place {
  int distinguished;
  int conjugate;
};

// Pairs under the distinguished conjugation, ordered by first occurrence.
std::vector<Place> places(const FieldModel& m);

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  bool ok() const;
  const Check* first_failure() const;
};

ValidationReport validate(const FieldModel& m);

enum class FieldCase { CM, TR };
const char* to_string(FieldCase c);

// Requires the subfield layer; throws "classification requires subfield layer".
FieldCase classify(const FieldModel& m);

// The supplied layer, or F1 = F with the distinguished conjugation when absent.
SubfieldLayer effective_layer(const FieldModel& m);

// Embeddings over each subfield label, in input order.
std::vector<std::vector<int>> fibers(const SubfieldLayer& layer, std::size_t degree);

struct SubfieldPlace {
  int distinguished;  // subfield label index
  int conjugate;      // equals distinguished in the TR case
};

std::vector<SubfieldPlace> subfield_places(const FieldModel& m);

// Places of the subfield first; within each, the fiber over the distinguished
// label and then the fiber over its conjugate.
std::vector<int> compatible_ordering(const FieldModel& m);

struct GaloisElement {
  std::string name;
  IndexMap perm;  // embedding i -> gamma o tau_i
};

struct PlaceActionData {
  FieldCase field_case;
  IndexMap pi_F;     // on embeddings
  IndexMap pi_F1;    // on subfield labels
  IndexMap pi_1inf;  // on subfield places
  std::vector<int> J;  // subfield places whose distinguished label is sent to a non-distinguished one
  IndexMap pi_hat;     // order-preserving fiber transport
  IndexMap pi_prime;   // pi_F o pi_hat^{-1}; stabilises every fiber
};

// Throws "not a Galois element for this model" when g is not fiber-compatible.
PlaceActionData galois_place_data(const FieldModel& m, const GaloisElement& g);

}  // namespace eiscomb
