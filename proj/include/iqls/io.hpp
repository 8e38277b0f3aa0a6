#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "iqls/iqls.hpp"
#include "iqls/linalg.hpp"

namespace iqls {

/// Shortest decimal string that round-trips the double exactly.
std::string format_double(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Dataset CSV: header `x1,...,xd,y`, one sample per row.
std::string dataset_csv(const Dataset& ds);
void write_dataset_csv(const std::string& path, const Dataset& ds);
Dataset read_dataset_csv(const std::string& path);
Dataset parse_dataset_csv(const std::string& text);

/// Per-iteration trace table: header
/// `iteration,mse,sse,lower_1,upper_1,w_1,...,lower_d,upper_d,w_d`
/// with the bounds of the box each iteration searched in.
std::string trace_csv(const IqlsTrace& trace);

/// Complete structured record of a run (config, records array, stop_reason).
nlohmann::json trace_json(const IqlsTrace& trace);

}  // namespace iqls
