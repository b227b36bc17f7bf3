#pragma once

// One record per command. Each record is computed once and rendered either
// as a single JSON line or as human-readable text.

#include <optional>
#include <string>

#include "enriques/certify.hpp"
#include "enriques/hilb.hpp"
#include "enriques/phi.hpp"
#include "enriques/surface.hpp"

namespace enriques::cli {

struct OracleCheck {
  int radius = 0;
  std::optional<Integer> value;
};

struct PhiRecord {
  PicClass h;
  Integer h_squared;
  PhiResult result;
  std::optional<OracleCheck> oracle;
};

struct HilbRecord {
  Hilb2Class c;
  bool nef = false;
  std::optional<PositivityVerdict> verdict;  // only for n = 2
};

PhiRecord compute_phi(const PicClass& h, std::optional<int> oracle_radius = std::nullopt);
PolarizedSurfaceReport compute_report(const PicClass& h);
// The ample verdict needs L^2 > 0 and n = 2; otherwise only the nef answer
// is reported.
HilbRecord compute_hilb(const Hilb2Class& c);
Certificate compute_certificate(const PicClass& h, long k, CertTarget target);

std::string to_json(const PhiRecord& r);
std::string to_json(const PolarizedSurfaceReport& r);
std::string to_json(const HilbRecord& r);
std::string to_json(const Certificate& c);

// Human renderers; the output ends with a newline.
std::string to_human(const PhiRecord& r);
std::string to_human(const PolarizedSurfaceReport& r);
std::string to_human(const HilbRecord& r);
std::string to_human(const Certificate& c);

}  // namespace enriques::cli
