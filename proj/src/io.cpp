#include "ptvarfima/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace ptvarfima {

std::string format_full(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_acvf_csv(std::ostream& out, const AcvfTable& table,
                    bool include_rho) {
  out << (include_rho ? "season,lag,gamma,rho,method\n"
                      : "season,lag,gamma,method\n");
  const char* method = to_string(table.method);
  for (int s = 1; s <= table.model.period(); ++s)
    for (int h = table.first_lag; h <= table.max_lag; ++h) {
      out << s << ',' << h << ',' << format_full(table.gamma_at(s, h));
      if (include_rho) out << ',' << format_full(table.rho_at(s, h));
      out << ',' << method << '\n';
    }
}

void write_path_csv(std::ostream& out, const SamplePath& path,
                    bool include_noise) {
  out << (include_noise ? "t,season,x,eps\n" : "t,season,x\n");
  const int p = path.model.period();
  for (int t = 1; t <= path.n(); ++t) {
    out << t << ',' << season_of(t, p).value() << ','
        << format_full(path.x_at(t));
    if (include_noise) out << ',' << format_full(path.noise_at(t));
    out << '\n';
  }
}

void write_stats_csv(std::ostream& out, const PeriodicSampleStats& stats) {
  out << "season,lag,gamma_hat,rho_hat,n_pairs\n";
  const bool have_rho = !stats.rho_hat.empty();
  for (int s = 1; s <= stats.period; ++s)
    for (int h = 0; h <= stats.max_lag; ++h) {
      out << s << ',' << h << ',' << format_full(stats.gamma_at(s, h)) << ',';
      if (have_rho) out << format_full(stats.rho_at(s, h));
      out << ','
          << stats.pair_counts[static_cast<std::size_t>(s - 1)]
                              [static_cast<std::size_t>(h)]
          << '\n';
    }
}

std::string manifest_json(const Ensemble& ensemble,
                          const std::vector<std::string>& path_files,
                          bool noise_retained) {
  nlohmann::json doc;
  doc["master_seed"] = ensemble.master_seed;
  doc["replicates"] = ensemble.replicates.size();
  std::vector<std::uint64_t> seeds;
  seeds.reserve(ensemble.replicates.size());
  for (const auto& rep : ensemble.replicates) seeds.push_back(rep.seed);
  doc["seeds"] = seeds;
  doc["model"] = nlohmann::json::parse(model_to_json(ensemble.model));
  doc["n"] = ensemble.n;
  doc["truncation"] = ensemble.truncation;
  doc["burn_in"] = ensemble.burn_in;
  doc["noise_distribution"] = "gaussian";
  doc["noise_retained"] = noise_retained;
  doc["paths"] = path_files;
  return doc.dump(2) + "\n";
}

namespace {

bool parse_double(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::vector<double> read_series_csv(std::istream& in) {
  std::vector<double> series;
  std::string line;
  std::size_t value_column = 0;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (first) {
      first = false;
      double probe;
      if (!parse_double(fields[0], probe)) {
        // header row; a path CSV carries x in the third column
        if (fields.size() >= 3 && fields[0] == "t" && fields[1] == "season" &&
            fields[2] == "x")
          value_column = 2;
        else if (fields.size() == 1)
          value_column = 0;
        else
          throw std::invalid_argument(
              "series CSV: unrecognized header '" + line + "'");
        continue;
      }
      value_column = fields.size() >= 3 ? 2 : 0;
    }
    if (fields.size() <= value_column)
      throw std::invalid_argument("series CSV: short row at line " +
                                  std::to_string(line_no));
    double v;
    if (!parse_double(fields[value_column], v))
      throw std::invalid_argument("series CSV: non-numeric value at line " +
                                  std::to_string(line_no));
    series.push_back(v);
  }
  if (series.empty())
    throw std::invalid_argument("series CSV: no data rows");
  return series;
}

std::vector<double> read_series_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open series file: " + path);
  return read_series_csv(in);
}

}  // namespace ptvarfima
