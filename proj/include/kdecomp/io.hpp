#pragma once

#include <iosfwd>
#include <string>

#include "kdecomp/dataset.hpp"
#include "kdecomp/decomposition.hpp"

namespace kdecomp {

// CSV ingestion: one row per line, comma-separated fixed-point decimals, no
// header unless skip_header is set. Arity is fixed by the first data row.
// Errors name the offending line / column.
TupleDataset read_csv(std::istream& in, bool skip_header = false);
TupleDataset read_csv_file(const std::string& path, bool skip_header = false);

// JSON array-of-arrays ingestion.
TupleDataset read_json(std::istream& in);
TupleDataset read_json_file(const std::string& path);

// Dataset rows as CSV, one row per line, canonical scalar rendering.
void write_csv(std::ostream& out, const TupleDataset& dataset);

// Per-projection rows of a decomposition report as CSV.
void write_projection_csv(std::ostream& out, const DecompositionReport& report);

// Loads a dataset by extension: ".json" as JSON, anything else as CSV.
TupleDataset read_dataset_file(const std::string& path, bool skip_header = false);

}  // namespace kdecomp
