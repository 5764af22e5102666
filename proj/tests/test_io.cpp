#include "doctest.h"

#include "eiscomb/io.hpp"
#include "eiscomb/models.hpp"

using namespace eiscomb;

TEST_CASE("model JSON round trip") {
  for (const auto& m : {models::imaginary_quadratic(), models::s3_model(), models::tr_model(2, 2)}) {
    auto j = io::model_to_json(m, m.degree() == 6 && m.layer->labels.size() == 2 ? models::s3_galois() : std::vector<GaloisElement>{});
    auto back = io::parse_model(j.dump());
    CHECK(back.model.embeddings == m.embeddings);
    CHECK(back.model.conjugations == m.conjugations);
    CHECK(back.model.distinguished == m.distinguished);
    REQUIRE(back.model.layer.has_value());
    CHECK(back.model.layer->restriction == m.layer->restriction);
    CHECK(back.model.layer->conjugation == m.layer->conjugation);
    CHECK(io::model_to_json(back.model, back.galois).dump() == j.dump());
  }
}

TEST_CASE("model errors name the offending element") {
  CHECK_THROWS_WITH(io::parse_model(R"({"embeddings":["a","b"],"conjugations":[[["a","c"]]]})", "m.json"),
                    doctest::Contains("$.conjugations[0][0][1]: unknown label 'c'"));
  CHECK_THROWS_WITH(io::parse_model("{\n  \"embeddings\": [\"a\",\n", "m.json"), doctest::Contains("line 3"));
  CHECK_THROWS_WITH(io::parse_model(R"({"embeddings":["a","a"],"conjugations":[]})", "m.json"), doctest::Contains("duplicate label 'a'"));
}

TEST_CASE("weight parsing") {
  auto m = models::imaginary_quadratic();
  auto w = io::parse_weight(R"({"n":2,"components":{"eta":[3,1],"etabar":[0,-2]}})", m);
  CHECK(w.comp[0] == Tuple{3, 1});
  CHECK(io::parse_weight(io::weight_to_json(w, m).dump(), m) == w);
  CHECK_THROWS_WITH(io::parse_weight(R"({"n":2,"components":{"eta":[3,1]}})", m), doctest::Contains("etabar"));
  CHECK_THROWS_WITH(io::parse_weight(R"({"n":2,"components":{"eta":[3],"etabar":[0,1]}})", m), doctest::Contains("$.components.eta"));
}

TEST_CASE("PiRational serialisation") {
  auto x = PiRational::two_pi_power(Rational(1, 3), Half(2));
  auto j = io::to_json(x);
  CHECK(j["two_pi_coefficient"] == "1/3");
  CHECK(j["pi_exponent"] == "2");
  auto y = gamma_value(half_of(1));  // sqrt(pi)
  CHECK(io::to_json(y)["pi_exponent"] == "1/2");
  CHECK(io::to_json(PiRational::pole())["pole"] == true);
}

TEST_CASE("digest is stable") {
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("shipped model files") {
  const std::string dir = EISCOMB_MODELS_DIR;
  for (const char* f : {"/imaginary_quadratic.json", "/s3.json", "/tr_three_places.json"}) {
    auto mf = io::load_model(dir + f);
    CHECK_MESSAGE(validate(mf.model).ok(), f);
  }
  auto tr = io::load_model(dir + "/tr_three_places.json");
  const auto ref = models::tr_model(3, 2);
  CHECK(tr.model.embeddings == ref.embeddings);
  CHECK(tr.model.conjugations == ref.conjugations);
  CHECK(classify(tr.model) == FieldCase::TR);
  for (const char* f : {"/reps/tr_n2_n1.json", "/reps/tr_n2_n2.json"}) {
    auto j = io::json::parse(io::read_file(dir + f));
    CHECK(j["components"].size() == tr.model.embeddings.size());
  }
}
