#pragma once

#include <string>

#include "kernelpe/bounds.hpp"
#include "kernelpe/pe.hpp"

namespace kernelpe {

std::string to_json_string(const PeCertificate& cert);
std::string to_json_string(const BoundReport& report);

} // namespace kernelpe
