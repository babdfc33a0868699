// File formats: ACVF table CSV (season,lag,gamma[,rho],method), path CSV
// (t,season,x[,eps]), stats CSV (season,lag,gamma_hat,rho_hat,n_pairs) and
// the ensemble manifest JSON. Numeric fields carry 17 significant digits and
// all formatting is locale-independent, so identical inputs produce
// byte-identical files.
#pragma once

#include "ptvarfima/acvf.hpp"
#include "ptvarfima/estimate.hpp"
#include "ptvarfima/simulate.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ptvarfima {

// 17 significant digits, locale-independent.
std::string format_full(double v);

void write_acvf_csv(std::ostream& out, const AcvfTable& table,
                    bool include_rho);

void write_path_csv(std::ostream& out, const SamplePath& path,
                    bool include_noise);

void write_stats_csv(std::ostream& out, const PeriodicSampleStats& stats);

std::string manifest_json(const Ensemble& ensemble,
                          const std::vector<std::string>& path_files,
                          bool noise_retained);

// Reads either a path CSV (header t,season,x[,eps]; the x column is taken)
// or a single-column numeric CSV with or without a header row.
std::vector<double> read_series_csv(std::istream& in);
std::vector<double> read_series_csv_file(const std::string& path);

}  // namespace ptvarfima
