#include <doctest.h>

#include <string>

#include "kframe/document.hpp"
#include "kframe/errors.hpp"
#include "support.hpp"

using namespace kframe;
using namespace kframe::testing;

namespace {

const char* kSampleDoc = R"json({
  "version": "1",
  "spaces": {
    "K": {"signature": [1, -1]}
  },
  "families": {
    "basis": {
      "space": "K",
      "vectors": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]
    }
  },
  "operators": {
    "S0": {"space": "K", "entries": [[[2.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]}
  },
  "specs": {
    "norms": {"norms": [1.0, 1.0, 1.0]}
  }
})json";

}  // namespace

TEST_CASE("documents parse into resolved library values") {
  const Document doc = parse_document(kSampleDoc);
  CHECK(doc.space("K").signature() == std::vector<int>{1, -1});
  const VectorFamily f = doc.family("basis");
  CHECK(f.k() == 2);
  CHECK(std::abs(f.synthesis(0, 0) - complex(1.0)) == 0.0);
  CHECK(doc.op("S0").matrix(0, 0) == complex(2.0));
  CHECK(doc.spec("norms").norms.size() == 3);
}

TEST_CASE("emit then parse is bit-exact") {
  Rng rng(81);
  Document doc;
  doc.spaces.emplace("K", standard_space(3));
  doc.spaces.emplace("H", hilbert_space(2));
  doc.families.emplace("F", Document::FamilyEntry{"K", random_matrix(rng, 3, 5)});
  doc.operators.emplace("S", Document::OperatorEntry{"H", random_matrix(rng, 2, 2)});
  doc.specs.emplace("spec", Document::SpecEntry{{2.0, 1.0}, {}});

  const std::string text = emit_document(doc);
  const Document back = parse_document(text);
  CHECK(back.spaces.at("K").signature() == doc.spaces.at("K").signature());
  CHECK(back.families.at("F").synthesis == doc.families.at("F").synthesis);
  CHECK(back.operators.at("S").matrix == doc.operators.at("S").matrix);
  CHECK(back.specs.at("spec").eigenvalues == doc.specs.at("spec").eigenvalues);
  CHECK(emit_document(back) == text);
}

TEST_CASE("errors name the offending path") {
  CHECK_THROWS_AS(parse_document("{not json"), DocumentError);
  try {
    parse_document(R"({"spaces": {"K": {"signature": [1, 2]}}})");
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("spaces.K.signature[1]") != std::string::npos);
  }
  try {
    parse_document(R"({"specs": {"s": {}}})");
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("specs.s") != std::string::npos);
  }
}

TEST_CASE("family lookup failures carry the name") {
  const Document doc = parse_document(kSampleDoc);
  CHECK_THROWS_AS(doc.family("missing"), DocumentError);
  CHECK_THROWS_AS(doc.space("missing"), DocumentError);
}

TEST_CASE("dimension mismatch between family and space is rejected") {
  const char* bad = R"json({
    "spaces": {"K": {"signature": [1, -1, 1]}},
    "families": {"f": {"space": "K", "vectors": [[[1.0, 0.0], [0.0, 0.0]]]}}
  })json";
  const Document doc = parse_document(bad);
  CHECK_THROWS_AS(doc.family("f"), DocumentError);
}
