#include "hermring/fixtures.hpp"

namespace hermring::fixtures {
namespace {
constexpr long long k_h13[] = {0,0,0,2,-4,0,112,-4,-432,0,-640,-594,5504,0,-4320,9380,-20288,0,46848,-71622,-16200,0,-123376,331668,282112,0,-65664,-978492,-453376,0,709600,1749808,-1112832,0,-120064,-1329480,3895356,0,-2315088,-1756316,-152160,0,-2846208,7579934,-11366784,0,16414816,-17552376,10176512,0,5875200,33105284,3775288};
constexpr PlusRecipeTerm k_h13_recipe[] = {{2,14,3},{-60,10,4},{448,6,5}};
constexpr long long k_h15[] = {0,0,0,0,1,0,12,64,36,0,-128,-1152,-936,0,-504,7872,8144,0,16128,-18816,-32022,0,-121100,-51264,26976,0,464256,408960,258448,0,-909576,-577024,-971712,0,355072,-2085120,525753,0,2238876,7869888,4278504,0,-5027328,-853760,-9440856,0,8767832,-36277632,-1162368,0,-26012160,46803840,24912602,0,40240728,71676992,-22735296,0,47704960,-187329024,8247408};
constexpr PlusRecipeTerm k_h15_recipe[] = {{1,14,4},{-28,10,5},{192,6,6}};
constexpr long long k_h17[] = {0,0,0,0,1,0,-12,-128,-228,0,-800,-768,1872,0,15576,36480,9296,0,-108864,-297216,-178110,0,356140,845952,816576,0,-682656,1071360,-803744,0,3381480,-12461056,-5338176,0,-23163968,20912640,16663617,0,79051812,40330368,2424120,0,-99195264,-169433600,-64675536,0,-142870072,63431424,-965376,0,629961600,381400320,220457666,0,-671789592,-295596160,283752576,0,90976480,62678016,-1557183840,0,-135149088,-2319442560,-394334976,0,-99539136,1338126080,6624813570};
constexpr PlusRecipeTerm k_h17_recipe[] = {{1,18,4},{-36,14,5},{368,10,6},{-768,6,7}};
constexpr PlusFormFixture kFixtures[] = {
  {"h13", 13, 52, k_h13, 53, k_h13_recipe, 3},
  {"h15", 15, 60, k_h15, 61, k_h15_recipe, 3},
  {"h17", 17, 68, k_h17, 69, k_h17_recipe, 4},
};
}  // namespace

std::span<const PlusFormFixture> plus_form_fixtures() { return kFixtures; }

const PlusFormFixture* find_plus_form_fixture(std::string_view name) {
  for (const auto& f : kFixtures)
    if (name == f.name) return &f;
  return nullptr;
}

}  // namespace hermring::fixtures
