#pragma once

#include <string>

#include "discordq/cv_core.hpp"
#include "discordq/wigner.hpp"

namespace discordq::io {

/// {"V": [[...], [...], [...], [...]]}, row-major over (x1, p1, x2, p2).
/// Throws ParseError on malformed input; does not check physicality.
cv::CovarianceMatrix covariance_from_json(const std::string& text);
std::string covariance_to_json(const cv::CovarianceMatrix& v);

/// {"components": [{"poly": [{"exp": [e1, e2, e3, e4], "re": .., "im": ..}],
///                  "quad": [[..] x4], "lin": [..], "logconst": ..}]}
wigner::WignerState wigner_from_json(const std::string& text);
std::string wigner_to_json(const wigner::WignerState& w, int indent = -1);

}  // namespace discordq::io
