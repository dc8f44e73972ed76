#include <gtest/gtest.h>

#include <filesystem>
#include <functional>

#include "flagcoords/io.hpp"
#include "flagcoords/random.hpp"
#include "flagcoords/solver.hpp"

using namespace fc;

namespace {

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error raised";
  return Error(ErrorCode::IoError, "");
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("flagcoords_io_" + name)).string();
}

}  // namespace

TEST(Json, DumpUses17Digits) {
  json j;
  j["x"] = 0.1;
  j["y"] = 1.0;
  j["z"] = json::array({1.0 / 3.0});
  EXPECT_EQ(dump(j, 0), "{\"x\":0.10000000000000001,\"y\":1.0,\"z\":[0.33333333333333331]}");
}

TEST(Json, ParseErrorCarriesByteOffset) {
  Error e = error_of([] { parse_json("{\"a\": [1, 2"); });
  EXPECT_EQ(e.code(), ErrorCode::ParseError);
  EXPECT_NE(e.detail().find("at byte 12"), std::string::npos) << e.detail();
}

TEST(Json, MissingFileIsIoError) {
  EXPECT_EQ(error_of([] { read_json_file("/nonexistent/flagcoords.json"); }).code(), ErrorCode::IoError);
}

TEST(Json, TriangulationRoundTrip) {
  for (const Triangulation& t : {Triangulation::canonical_torus(), standard_triangulation(2, 1),
                                 standard_triangulation(0, 4)}) {
    Triangulation u = triangulation_from_json(parse_json(dump(to_json(t))));
    EXPECT_EQ(dump(to_json(u)), dump(to_json(t)));
    EXPECT_EQ(u.num_edges(), t.num_edges());
    EXPECT_EQ(u.cycle_labels(), t.cycle_labels());
  }
}

TEST(Json, DecorationRoundTripIsExact) {
  Rng rng(121);
  Triangulation t = standard_triangulation(1, 2);
  Decoration d = random_decorated_instance(t, rng).decoration;
  Decoration e = decoration_from_json(t, parse_json(dump(to_json(t, d))));
  EXPECT_EQ(e.phi, d.phi);
  for (int f = 0; f < t.num_faces(); ++f) {
    EXPECT_EQ(e.faces[f].Phi, d.faces[f].Phi);
    EXPECT_EQ(e.faces[f].delta, d.faces[f].delta);
  }
  MDecoration md = project_to_m(d, t);
  MDecoration me = mdecoration_from_json(t, parse_json(dump(to_json(t, md))));
  EXPECT_EQ(me.m, md.m);
  EXPECT_EQ(me.Phi, md.Phi);
}

TEST(Json, LoopsRoundTrip) {
  Triangulation t = Triangulation::canonical_torus();
  Hexagonation hx = build_hexagonation(t);
  LoopSet ls = canonical_torus_loops(t, hx);
  json j = to_json(hx, ls);
  EXPECT_EQ(j["relator"], "abABc");
  LoopSet back = loops_from_json(hx, parse_json(dump(j)));
  ASSERT_EQ(back.loops.size(), 3u);
  EXPECT_EQ(back.base_vertex, ls.base_vertex);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back.loops[i].first, ls.loops[i].first);
    ASSERT_EQ(back.loops[i].second.size(), ls.loops[i].second.size());
    for (size_t k = 0; k < ls.loops[i].second.size(); ++k) {
      EXPECT_EQ(hx.tail(back.loops[i].second[k]), hx.tail(ls.loops[i].second[k]));
      EXPECT_EQ(hx.head(back.loops[i].second[k]), hx.head(ls.loops[i].second[k]));
    }
  }
}

TEST(Json, SchemaViolations) {
  Rng rng(122);
  Triangulation t = Triangulation::canonical_torus();
  Decoration d = random_decorated_instance(t, rng).decoration;
  json j = to_json(t, d);

  json null_phi = j;
  null_phi["phi"][1]["value"] = nullptr;
  EXPECT_EQ(error_of([&] { decoration_from_json(t, null_phi); }).code(), ErrorCode::ParseError);

  json null_delta = j;
  null_delta["faces"][0]["delta"][2] = nullptr;
  EXPECT_EQ(error_of([&] { decoration_from_json(t, null_delta); }).code(), ErrorCode::ParseError);

  json missing = j;
  missing["phi"].erase(2);
  Error e = error_of([&] { decoration_from_json(t, missing); });
  EXPECT_EQ(e.code(), ErrorCode::ParseError);
  EXPECT_NE(e.detail().find("edge 2"), std::string::npos);

  json dup = j;
  dup["faces"][1]["face"] = 0;
  EXPECT_EQ(error_of([&] { decoration_from_json(t, dup); }).code(), ErrorCode::ParseError);

  EXPECT_EQ(error_of([] { triangulation_from_json(parse_json("{\"genus\": 1}")); }).code(),
            ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { complex_from_json(parse_json("[1, 2, 3]")); }).code(), ErrorCode::ParseError);
}

TEST(Json, FileRoundTrip) {
  std::string path = temp_path("tri.json");
  write_text_file(path, dump(to_json(Triangulation::thrice_punctured_sphere())));
  Triangulation t = triangulation_from_json(read_json_file(path));
  EXPECT_EQ(t.punctures(), 3);
  write_text_file(path, "{\"genus\": ");
  Error e = error_of([&] { read_json_file(path); });
  EXPECT_EQ(e.code(), ErrorCode::ParseError);
  EXPECT_NE(e.detail().find(path), std::string::npos);
  std::filesystem::remove(path);
}
