// Copyright 2026 The edrsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDRSIM_IO_HPP
#define EDRSIM_IO_HPP

#include <filesystem>
#include <string>

#include "edrsim/sweep.hpp"

namespace edrsim {

inline constexpr int kFormatVersion = 1;

/// An externally recorded two-channel quadrature record, already calibrated
/// to shot-noise units. File format: '#' preamble with basis, t and n, then
/// one "ch1,ch2" pair per line.
struct RecordedDataset {
  Basis basis = Basis::X;
  Transmission t{0.5};
  std::vector<double> ch1;
  std::vector<double> ch2;
  std::string source;
  std::size_t declared_n = 0;
};

/// Parse a flat key=value config ('#' comments, blank lines allowed).
/// Unknown keys, unparsable values and out-of-range values are reported with
/// their line number. An empty text yields SweepConfig::defaults().
SweepConfig parse_config(const std::string& text);

SweepConfig parse_config_file(const std::filesystem::path& path);

/// Format a double with 17 significant digits (round-trip exact).
std::string format_real(double v);

/// Write sweep.csv, report.json and bounds.csv into dir.
void write_results(const SweepResult& result, const std::filesystem::path& dir);

/// Inverse of the report.json emitted by write_results.
SweepResult read_report_json(const std::filesystem::path& path);

void write_recorded(const SampleBatch& batch, const std::filesystem::path& path);

RecordedDataset read_recorded(const std::filesystem::path& path);

/// Estimators applied to a pair of in-memory records (one per basis).
/// sigma_A and sigma_B are reconstructed from the output channels via the
/// inverse beam-splitter relation x_s = sqrt(T) x_c + sqrt(R) x_d (and the
/// same for p).
EdrReport analyze_batches(const SampleBatch& x_batch, const SampleBatch& p_batch,
                          Transmission t);

/// Estimators applied to two recorded files with matching t and
/// complementary bases.
EdrReport analyze_recorded(const std::filesystem::path& x_file,
                           const std::filesystem::path& p_file, Transmission t);

}  // namespace edrsim

#endif  // EDRSIM_IO_HPP
