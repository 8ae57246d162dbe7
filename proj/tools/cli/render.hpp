#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparse_ramsey/goodness.hpp"
#include "sparse_ramsey/ramsey.hpp"
#include "sparse_ramsey/structure.hpp"
#include "sparse_ramsey/sweeps.hpp"
#include "sparse_ramsey/witness.hpp"

namespace sparse_ramsey::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Left-aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

Json profile_json(const SparsityProfile& p);
Json bounds_json(const SparsityProfile& p, const std::vector<int>& s_values);
Json trace_json(const ReductionTrace& t);
Json prediction_json(const GoodnessPrediction& p);
Json bound_json(const BoundReport& b);
Json witness_json(const WitnessColoring& w);
Json certificate_json(const RamseyCertificate& c, const CertificateCheck* check);
Json sweep_json(const SweepReport& r, bool rows);

std::string yes_no(bool b);

}  // namespace sparse_ramsey::cli
