#include <doctest.h>

#include <random>

#include "cuttrees/errors.hpp"
#include "cuttrees/normal_forms.hpp"
#include "cuttrees/presets.hpp"

using namespace cuttrees;

namespace {

Presentation preset(const char* name) {
  return Presentation::from_json(preset_presentation(name));
}

Letter random_letter(const Presentation& p, std::mt19937_64& rng) {
  if (p.kind() == Presentation::Kind::Amalgam) {
    const auto& d = p.amalgam();
    if (std::uniform_int_distribution<int>(0, 1)(rng))
      return Letter{Letter::Kind::FactorH,
                    std::uniform_int_distribution<ElementIndex>(0, d.H.order() - 1)(rng), 0};
    return Letter{Letter::Kind::FactorJ,
                  std::uniform_int_distribution<ElementIndex>(0, d.J.order() - 1)(rng), 0};
  }
  const auto& d = p.hnn();
  const int k = std::uniform_int_distribution<int>(0, 2)(rng);
  if (k == 0)
    return Letter{Letter::Kind::FactorH,
                  std::uniform_int_distribution<ElementIndex>(0, d.H.order() - 1)(rng), 0};
  return Letter{Letter::Kind::Stable, 0, k == 1 ? +1 : -1};
}

GroupWord random_word(const Presentation& p, std::mt19937_64& rng, int max_len) {
  GroupWord w;
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  for (int i = 0; i < len; ++i) w.push_back(random_letter(p, rng));
  return w;
}

}  // namespace

TEST_CASE("presentation file validation") {
  CHECK_THROWS_AS(Presentation::from_json("{}"), InputError);
  CHECK_THROWS_AS(Presentation::from_json("nonsense"), InputError);
  // Element tokens may not contain dots.
  CHECK_THROWS_AS(
      Presentation::from_json(R"({"kind":"amalgam",
        "H":{"elements":["1","a.x"],"table":[["1","a.x"],["a.x","1"]]},
        "J":{"elements":["1","b"],"table":[["1","b"],["b","1"]]},
        "A":["1"],"B":["1"],"phi":{"1":"1"},"generators":["a.x","b"]})"),
      InputError);
  for (const auto& name : preset_names()) CHECK_NOTHROW(preset(name.c_str()));
}

TEST_CASE("identity and encoding") {
  const Presentation p = preset("z2_z3");
  CHECK(p.is_identity(p.identity_form()));
  CHECK(p.encode(p.identity_form()) == "1");
  const GroupWord w = p.parse_word("a b a");
  const NormalForm nf = p.normalize(w);
  CHECK(p.encode(p.decode(p.encode(nf))) == p.encode(nf));
  CHECK(p.encode(p.normalize(p.parse_word("a a"))) == "1");
  CHECK(p.encode(p.normalize(p.parse_word("b b b"))) == "1");
}

TEST_CASE("inverses and associativity") {
  std::mt19937_64 rng(99);
  for (const char* name : {"z2_z3", "z4_z2_z4", "z4_hnn_z2", "z_hnn"}) {
    const Presentation p = preset(name);
    for (int trial = 0; trial < 100; ++trial) {
      const NormalForm x = p.normalize(random_word(p, rng, 8));
      const NormalForm y = p.normalize(random_word(p, rng, 8));
      const NormalForm z = p.normalize(random_word(p, rng, 8));
      CHECK(p.is_identity(p.multiply(x, p.inverse(x))));
      CHECK(p.encode(p.multiply(p.multiply(x, y), z)) ==
            p.encode(p.multiply(x, p.multiply(y, z))));
      p.validate_form(x);
    }
  }
}

TEST_CASE("britton relation in the hnn preset") {
  const Presentation p = preset("z4_hnn_z2");
  // t^-1 (hh) t = phi(hh) = hh
  GroupWord w;
  w.push_back(Letter{Letter::Kind::Stable, 0, -1});
  w.push_back(p.parse_letter("hh"));
  w.push_back(Letter{Letter::Kind::Stable, 0, +1});
  CHECK(p.encode(p.normalize(w)) == "hh");
  // t^-1 h t does not reduce: h is outside A.
  GroupWord v;
  v.push_back(Letter{Letter::Kind::Stable, 0, -1});
  v.push_back(p.parse_letter("h"));
  v.push_back(Letter{Letter::Kind::Stable, 0, +1});
  CHECK(std::get<HnnNormalForm>(p.normalize(v)).syllables.size() == 2);
}

TEST_CASE("relator insertion preserves normal forms") {
  std::mt19937_64 rng(7);
  for (const char* name : {"z2_z3", "z4_z2_z4", "z4_hnn_z2"}) {
    const Presentation p = preset(name);
    for (int trial = 0; trial < 200; ++trial) {
      GroupWord w = random_word(p, rng, 10);
      GroupWord w2 = w;
      const Letter l = random_letter(p, rng);
      const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, w2.size())(rng);
      w2.insert(w2.begin() + pos, {l, p.inverse_letter(l)});
      CHECK(p.encode(p.normalize(w)) == p.encode(p.normalize(w2)));
    }
  }
}

TEST_CASE("cayley neighbours are symmetric") {
  const Presentation p = preset("z4_z2_z4");
  const auto nb = p.neighbours("1");
  CHECK(!nb.empty());
  for (const auto& w : nb) {
    const auto back = p.neighbours(w);
    CHECK(std::find(back.begin(), back.end(), "1") != back.end());
  }
}
