#include "iqls/io.hpp"

#include <fstream>
#include <sstream>

#include "iqls/errors.hpp"
#include "iqls/format.hpp"

namespace iqls {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

std::string dataset_csv(const Dataset& ds) {
  std::ostringstream out;
  for (std::size_t j = 0; j < ds.num_features(); ++j) out << "x" << (j + 1) << ",";
  out << "y\n";
  for (std::size_t i = 0; i < ds.num_samples(); ++i) {
    for (std::size_t j = 0; j < ds.num_features(); ++j) {
      out << format_double(ds.X(i, j)) << ",";
    }
    out << format_double(ds.y[i]) << "\n";
  }
  return out.str();
}

void write_dataset_csv(const std::string& path, const Dataset& ds) {
  write_text_file(path, dataset_csv(ds));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

Dataset parse_dataset_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty dataset CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split_csv_line(line);
  if (header.size() < 2 || header.back() != "y") {
    throw ParseError("dataset CSV header must be x1,...,xd,y");
  }
  const std::size_t d = header.size() - 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (header[j] != "x" + std::to_string(j + 1)) {
      throw ParseError("dataset CSV header column " + std::to_string(j + 1) +
                       " must be x" + std::to_string(j + 1) + ", got '" + header[j] + "'");
    }
  }

  std::vector<double> values;
  std::vector<double> targets;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != d + 1) {
      throw ParseError("dataset CSV line " + std::to_string(line_no) + " has " +
                       std::to_string(cells.size()) + " fields, expected " +
                       std::to_string(d + 1));
    }
    for (std::size_t j = 0; j < d; ++j) {
      values.push_back(parse_double(cells[j], "line " + std::to_string(line_no) + " column " +
                                                  std::to_string(j + 1)));
    }
    targets.push_back(
        parse_double(cells[d], "line " + std::to_string(line_no) + " target"));
  }
  if (targets.empty()) throw ParseError("dataset CSV has no sample rows");

  Matrix x(targets.size(), d);
  x.data = std::move(values);
  return Dataset(std::move(x), std::move(targets));
}

Dataset read_dataset_csv(const std::string& path) {
  return parse_dataset_csv(read_text_file(path));
}

std::string trace_csv(const IqlsTrace& trace) {
  std::ostringstream out;
  const std::size_t d = trace.config.initial_box.dim();
  out << "iteration,mse,sse";
  for (std::size_t i = 0; i < d; ++i) {
    out << ",lower_" << (i + 1) << ",upper_" << (i + 1) << ",w_" << (i + 1);
  }
  out << "\n";
  for (const auto& rec : trace.records) {
    out << rec.iteration << "," << format_double(rec.mse) << "," << format_double(rec.sse);
    for (std::size_t i = 0; i < d; ++i) {
      out << "," << format_double(rec.box_before.lower()[i]) << ","
          << format_double(rec.box_before.upper()[i]) << "," << format_double(rec.weights[i]);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

nlohmann::json box_json(const SearchBox& box) {
  return {{"lower", box.lower()}, {"upper", box.upper()}, {"width", box.width()}};
}

}  // namespace

nlohmann::json trace_json(const IqlsTrace& trace) {
  nlohmann::json j;
  j["config"] = {
      {"bits_per_weight", trace.config.bits_per_weight},
      {"max_iterations", trace.config.max_iterations},
      {"initial_box", box_json(trace.config.initial_box)},
      {"backend", backend_name(trace.config.backend)},
      {"anneal",
       {{"seed", trace.config.anneal.seed},
        {"restarts", trace.config.anneal.num_restarts},
        {"sweeps", trace.config.anneal.sweeps_per_restart},
        {"beta_initial", trace.config.anneal.beta_initial},
        {"beta_final", trace.config.anneal.beta_final}}},
      {"loss_tolerance", trace.config.loss_tolerance},
  };
  j["initial_midpoint"] = trace.initial_midpoint;
  j["records"] = nlohmann::json::array();
  for (const auto& rec : trace.records) {
    j["records"].push_back({
        {"iteration", rec.iteration},
        {"box_before", box_json(rec.box_before)},
        {"box_after", box_json(rec.box_after)},
        {"bits", rec.bits},
        {"weights", rec.weights},
        {"sse", rec.sse},
        {"mse", rec.mse},
        {"solver", rec.solver_name},
        {"qubo_offset", rec.qubo_offset},
        {"optimum_excluded", rec.optimum_excluded},
    });
  }
  j["final_weights"] = trace.final_weights;
  j["stop_reason"] = stop_reason_name(trace.stop_reason);
  return j;
}

}  // namespace iqls
