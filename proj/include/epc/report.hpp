#ifndef EPC_REPORT_HPP
#define EPC_REPORT_HPP

#include <string>

#include <json.hpp>

#include "epc/checks.hpp"
#include "epc/search.hpp"

namespace epc {

inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const EdgeSpectrum& s);
nlohmann::json to_json(const CycleSpectrum& s);
nlohmann::json to_json(const SearchOutcome& s);

/// {command, inputs, result, version, elapsed_ms}.
nlohmann::json envelope(const std::string& command, nlohmann::json inputs, nlohmann::json result,
                        double elapsed_ms);

}  // namespace epc

#endif  // EPC_REPORT_HPP
