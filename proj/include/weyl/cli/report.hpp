#pragma once

#include <string>

#include "json.hpp"
#include "weyl/certificate.hpp"
#include "weyl/dc_check.hpp"
#include "weyl/geometry.hpp"
#include "weyl/omega.hpp"

namespace weyl::cli {

/// Insertion-ordered so reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  ///< always "num/den"
Json to_json(const UniPoly& f);   ///< coefficient list, constant first
Json to_json(const WeylElement& z);
Json to_json(const BiPoly& f);
Json to_json(const LatticePolygon& poly);
Json to_json(const RoofChain& roof);
Json to_json(const Certificate& cert);
Json to_json(const DCReport& report, const WeylPair& input, const AutWord& pre_word);
Json to_json(const OmegaClass& c);

/// NTP as polygon#ntp-hull, the roof as polyline#ntp-roof, unit grid and
/// labelled support points, y axis pointing up.
std::string render_svg(const WeylElement& z);

}  // namespace weyl::cli
