#pragma once

#include <array>
#include <string_view>

// Names of the results each verdict rests on. Reports cite these so that
// downstream tooling can check which statement backs a section.
namespace ampsurf::tags {

inline constexpr std::string_view kRiemannRoch = "riemann-roch";
inline constexpr std::string_view kBogomolov = "bogomolov-inequality";
inline constexpr std::string_view kFultonLazarsfeld = "fulton-lazarsfeld-inequality";
inline constexpr std::string_view kRationalCurveRestriction = "ample-restriction-to-rational-curves";
inline constexpr std::string_view kStableSlopeBound = "stable-ample-slope-bound";
inline constexpr std::string_view kTangentBundleException = "tangent-bundle-exception";
inline constexpr std::string_view kFiberDegreeOne = "fiber-degree-one-forces-line-bundle";
inline constexpr std::string_view kWeakBrillNoetherP2 = "weak-brill-noether-p2";
inline constexpr std::string_view kWeakBrillNoetherFe = "weak-brill-noether-fe";
inline constexpr std::string_view kGlobalGenerationP2 = "gg-classification-p2";
inline constexpr std::string_view kGlobalGenerationFe = "gg-classification-fe";
inline constexpr std::string_view kGlobalGenerationF0 = "gg-classification-f0";
inline constexpr std::string_view kGlobalGenerationCriterion = "gg-big-nef-criterion";
inline constexpr std::string_view kAmpleGlobalGeneration = "ample-gg-theorem";
inline constexpr std::string_view kNonspecialTwists = "nonspecial-twists-lemma";
inline constexpr std::string_view kBadCurves = "bad-curve-finiteness-lemma";
inline constexpr std::string_view kSplittingCodimension = "splitting-codimension-lemma";
inline constexpr std::string_view kDimensionCount = "linear-system-dimension-count";
inline constexpr std::string_view kAsymptoticAmpleness = "asymptotic-ampleness-theorem";
inline constexpr std::string_view kEffectiveMultiplier = "effective-multiplier-bound";
inline constexpr std::string_view kGiesekerExample = "gieseker-cokernel-example";
inline constexpr std::string_view kOpenDenseSubstack = "moduli-open-in-prioritary-stack";

inline constexpr std::array<std::string_view, 22> kAll = {
    kRiemannRoch,          kBogomolov,          kFultonLazarsfeld,
    kRationalCurveRestriction, kStableSlopeBound, kTangentBundleException,
    kFiberDegreeOne,       kWeakBrillNoetherP2, kWeakBrillNoetherFe,
    kGlobalGenerationP2,   kGlobalGenerationFe, kGlobalGenerationF0,
    kGlobalGenerationCriterion, kAmpleGlobalGeneration, kNonspecialTwists,
    kBadCurves,            kSplittingCodimension, kDimensionCount,
    kAsymptoticAmpleness,  kEffectiveMultiplier, kGiesekerExample,
    kOpenDenseSubstack,
};

inline bool is_known(std::string_view tag) {
  for (auto t : kAll) {
    if (t == tag) return true;
  }
  return false;
}

}  // namespace ampsurf::tags
