#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eiscomb/arch_gamma.hpp"
#include "eiscomb/critical_engine.hpp"
#include "eiscomb/field_model.hpp"
#include "eiscomb/signature_engine.hpp"
#include "eiscomb/weight_algebra.hpp"
#include "eiscomb/weyl_kostant.hpp"

namespace eiscomb::io {

using json = nlohmann::ordered_json;

// Carries the source name and the JSON path or line of the offending element.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelFile {
  FieldModel model;
  std::vector<GaloisElement> galois;
};

ModelFile parse_model(std::string_view text, const std::string& source = "<model>");
ModelFile load_model(const std::string& path);
json model_to_json(const FieldModel& m, const std::vector<GaloisElement>& galois = {});

Weight parse_weight(std::string_view text, const FieldModel& m, const std::string& source = "<weight>");
Weight load_weight(const std::string& path, const FieldModel& m);
json weight_to_json(const Weight& w, const FieldModel& m);

std::string read_file(const std::string& path);

// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

json to_json(const Half& h);
json to_json(const PiRational& x);
json to_json(const Kappa& k);
json to_json(const KostantRep& w, const FieldModel& m);
json to_json(const WidthData& wd);
json to_json(const CriticalSet& cs);
json to_json(const SignatureReport& r);

}  // namespace eiscomb::io
