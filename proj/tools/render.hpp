#pragma once

#include <optional>
#include <string>

#include "droot/digital_root.hpp"
#include "droot/oracle.hpp"
#include "droot/sieve.hpp"

namespace droot::cli {

enum class Format { kText, kJson, kCsv };

std::string render_power_table(const PowerTable& table, Format format);
std::string render_op_table(ArithOp op, Format format);

/// JSON keys in fixed order: equation, variables, exponents, verdict,
/// projections, exponent_projections, [tuples], enumeration_size.
std::string render_report(const FeasibilityReport& report, Format format, bool with_tuples);

std::string render_search(const SearchResult& result, const SoundnessResult* soundness, Format format);

std::string render_fermat(const std::string& mode, std::int64_t a_max, std::int64_t p_max,
                          const FermatResult& result, double elapsed_ms, Format format);

}  // namespace droot::cli
