#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "pom/generators.hpp"
#include "pom/io.hpp"
#include "support.hpp"

using namespace pom;
using namespace pomtest;
using pom::io::Json;
using pom::io::SchemaError;

namespace {

/// The pointer carried by the schema error thrown by `fn`, or "<none>".
template <class Fn>
std::string pointer_of(Fn fn) {
  try {
    fn();
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<none>";
}

std::string canon(const std::string& s) { return io::canonicalize(s); }

}  // namespace

TEST(Monoid, ChainTwoGolden) {
  EXPECT_EQ(io::dump(io::to_json(chain(2))),
            R"({"kind":"monoid","elements":["0","1"],"op":[[0,0],[0,1]],"leq":[[true,true],[false,true]],"unit":1,"zero":0})");
}

TEST(Monoid, RoundTripOnCatalog) {
  for (const auto& c : catalog()) {
    const std::string text = io::dump(io::to_json(c.m));
    FiniteMonoid back = io::monoid_from_json(io::parse_json(text));
    EXPECT_EQ(back, c.m) << c.name;
    EXPECT_EQ(io::dump(io::to_json(back)), text) << c.name;
  }
  FiniteMonoid b3 = boolean_algebra(3);
  EXPECT_EQ(io::monoid_from_json(io::to_json(b3)), b3);
}

TEST(Monoid, SchemaErrorsCarryPointers) {
  const Json good = io::to_json(chain(2));
  auto with = [&](auto edit) {
    Json j = good;
    edit(j);
    return [j] { io::monoid_from_json(j); };
  };
  EXPECT_EQ(pointer_of(with([](Json& j) { j.erase("op"); })), "");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["kind"] = "ideal"; })), "/kind");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["extra"] = 1; })), "/extra");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["op"][1][0] = 5; })), "/op/1/0");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["op"][0][1] = -1; })), "/op/0/1");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["leq"][0][1] = 1; })), "/leq/0/1");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["leq"][1] = Json::array({true}); })), "/leq/1");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["elements"][0] = 0; })), "/elements/0");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["unit"] = 2; })), "/unit");
  EXPECT_EQ(pointer_of(with([](Json& j) { j["zero"] = "0"; })), "/zero");
  EXPECT_EQ(pointer_of([] { io::parse_json("{\"kind\":"); }), "");
  // Errors are structural errors, so the CLI maps them to exit 2.
  EXPECT_THROW(io::monoid_from_json(Json::array()), StructuralError);
}

TEST(Ideal, InlineAndPath) {
  FiniteMonoid b = boolean_algebra(2);
  io::IdealDocument d{{b, std::nullopt}, ElementSubset::of(4, {0, 1, 2})};
  const std::string text = io::dump(io::to_json(d));
  io::IdealDocument back = io::ideal_from_json(io::parse_json(text));
  EXPECT_EQ(back.monoid.monoid, b);
  EXPECT_EQ(back.members, d.members);
  EXPECT_EQ(canon(text), text);

  const auto dir = std::filesystem::temp_directory_path() / "pom_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "b2.json").string();
  std::ofstream(path) << io::dump(io::to_json(b));
  const std::string by_path = R"({"kind":"ideal","monoid":")" + path + R"(","members":[0]})";
  io::IdealDocument p = io::ideal_from_json(io::parse_json(by_path));
  EXPECT_EQ(p.monoid.monoid, b);
  ASSERT_TRUE(p.monoid.path.has_value());
  EXPECT_EQ(canon(by_path), by_path);
  EXPECT_EQ(pointer_of([&] {
              io::ideal_from_json(io::parse_json(R"({"kind":"ideal","monoid":")" + (dir / "nope.json").string() +
                                                 R"(","members":[]})"));
            }),
            "/monoid");
}

TEST(Ideal, MembersStrictlyIncreasing) {
  Json j = io::to_json(io::IdealDocument{{chain(3), std::nullopt}, ElementSubset::of(3, {0, 1})});
  j["members"] = Json::array({1, 0});
  EXPECT_EQ(pointer_of([&] { io::ideal_from_json(j); }), "/members/1");
  j["members"] = Json::array({0, 0});
  EXPECT_EQ(pointer_of([&] { io::ideal_from_json(j); }), "/members/1");
  j["members"] = Json::array({3});
  EXPECT_EQ(pointer_of([&] { io::ideal_from_json(j); }), "/members/0");
  j["monoid"]["op"][0][0] = 9;
  EXPECT_EQ(pointer_of([&] { io::ideal_from_json(j); }), "/monoid/op/0/0");
}

TEST(Endomap, RoundTripAndRange) {
  EndoMap p(std::vector<Index>{0, 1, 0, 1});
  EXPECT_EQ(io::dump(io::to_json(p)), R"({"kind":"endomap","image":[0,1,0,1]})");
  EXPECT_EQ(io::endomap_from_json(io::to_json(p)).image(), p.image());
  EXPECT_EQ(pointer_of([] { io::endomap_from_json(io::parse_json(R"({"kind":"endomap","image":[0,2]})")); }),
            "/image/1");
}

TEST(SetFunction, RationalsAreCanonical) {
  SetFunction u = uniform_measure(std::make_shared<const FiniteMonoid>(boolean_algebra(2)));
  const std::string text = io::dump(io::to_json(u));
  EXPECT_EQ(text, R"({"kind":"setfunction","dim":1,"values":[["0/1"],["1/2"],["1/2"],["1/1"]]})");
  io::ValueTable t = io::value_table_from_json(io::parse_json(text));
  EXPECT_EQ(io::bind(t, u.monoid_ptr()), u);

  for (const char* bad : {"2/4", "1", "-0/1", "1/-2", "+1/2", "0.5"}) {
    const std::string doc = std::string(R"({"kind":"setfunction","dim":1,"values":[["0/1"],[")") + bad + R"("]]})";
    EXPECT_EQ(pointer_of([&] { canon(doc); }), "/values/1/0") << bad;
  }
  EXPECT_EQ(pointer_of([] { canon(R"({"kind":"setfunction","dim":1,"values":[["0/1"],[1]]})"); }), "/values/1/0");
  EXPECT_EQ(pointer_of([] { canon(R"({"kind":"setfunction","dim":2,"values":[["0/1"]]})"); }), "/values/0");
  EXPECT_EQ(pointer_of([] { canon(R"({"kind":"setfunction","dim":0,"values":[]})"); }), "/dim");
  EXPECT_EQ(pointer_of([&] { io::bind(t, std::make_shared<const FiniteMonoid>(chain(3))); }), "/values");
  // A well-formed table that is not monotone is a domain error on binding.
  io::ValueTable down{1, {{Rational(0)}, {Rational(1)}, {Rational(0)}, {Rational(0)}}};
  EXPECT_THROW(io::bind(down, u.monoid_ptr()), DomainError);
}

TEST(Family, PointersIncludeMemberIndex) {
  const std::string doc =
      R"({"kind":"family","members":[{"kind":"setfunction","dim":1,"values":[["0/1"]]},)"
      R"({"kind":"setfunction","dim":1,"values":[["0/1"],["3/6"]]}]})";
  EXPECT_EQ(pointer_of([&] { canon(doc); }), "/members/1/values/1/0");
  io::ValueTable a{1, {{Rational(0)}, {Rational(1, 3)}}};
  const std::string text = io::dump(io::family_to_json({a, a}));
  EXPECT_EQ(io::family_from_json(io::parse_json(text)), (std::vector<io::ValueTable>{a, a}));
  EXPECT_EQ(canon(text), text);
}

TEST(Report, RoundTrip) {
  io::Report r;
  r.add("a", true);
  Json w;
  w["k"] = 4;
  w["antichain"] = {1, 2, 4};
  r.add("b", false, w);
  const std::string text = io::dump(io::to_json(r));
  EXPECT_EQ(text,
            R"({"kind":"report","checks":[{"name":"a","pass":true,"witness":null},)"
            R"({"name":"b","pass":false,"witness":{"k":4,"antichain":[1,2,4]}}]})");
  EXPECT_EQ(canon(text), text);
  EXPECT_FALSE(io::report_from_json(io::parse_json(text)).all());
  EXPECT_EQ(pointer_of([] { canon(R"({"kind":"report","checks":[{"name":"a","pass":1,"witness":null}]})"); }),
            "/checks/0/pass");
}

TEST(Canonicalize, NormalizesLayoutAndIsIdempotent) {
  const std::string messy = "{ \"image\" : [ 1, 1 ],\n  \"kind\": \"endomap\" }";
  const std::string once = canon(messy);
  EXPECT_EQ(once, R"({"kind":"endomap","image":[1,1]})");
  EXPECT_EQ(canon(once), once);
  for (const auto& c : catalog_up_to(16)) {
    const std::string t = canon(io::dump(io::to_json(c.m)));
    EXPECT_EQ(canon(t), t) << c.name;
  }
  EXPECT_EQ(pointer_of([] { canon(R"({"kind":"torus"})"); }), "/kind");
  EXPECT_EQ(pointer_of([] { canon(R"([1,2])"); }), "");
}
