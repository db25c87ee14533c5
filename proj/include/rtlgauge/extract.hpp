#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rtlgauge/frontend.hpp"

namespace rtlgauge {

struct ExtractResult {
  std::optional<VerilogSource> source;
  std::string error;  // "no code found" when empty
};

// Pulls Verilog out of a model response: first fenced block labeled
// verilog/systemverilog/sv/v, else the first fenced block of any label, else
// a bare `module`...`endmodule` span (extended to the last endmodule), else
// failure. Total over inputs.
ExtractResult extract_code(std::string_view raw_response, const std::string& origin);

}  // namespace rtlgauge
