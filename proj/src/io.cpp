#include "kdecomp/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kdecomp/error.hpp"

namespace kdecomp {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return in;
}

}  // namespace

TupleDataset read_csv(std::istream& in, bool skip_header) {
    std::vector<std::vector<QuantizedScalar>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skip_header && line_no == 1) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<QuantizedScalar> row;
        std::size_t start = 0, col = 0;
        while (start <= line.size()) {
            auto comma = line.find(',', start);
            auto field = std::string_view(line).substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            ++col;
            try {
                row.push_back(QuantizedScalar::parse(field));
            } catch (const Error& e) {
                throw ParseError("line " + std::to_string(line_no) + ", column " +
                                 std::to_string(col) + ": " + e.what());
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("line " + std::to_string(line_no) + " has " +
                             std::to_string(row.size()) + " fields, expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("no data rows in CSV input");
    }
    return TupleDataset::from_rows(rows.front().size(), rows);
}

TupleDataset read_csv_file(const std::string& path, bool skip_header) {
    auto in = open_or_throw(path);
    return read_csv(in, skip_header);
}

TupleDataset read_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON dataset: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("JSON dataset must be a non-empty array of arrays");
    }
    std::vector<std::vector<QuantizedScalar>> rows;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& row_json = doc[i];
        if (!row_json.is_array()) {
            throw ParseError("JSON row " + std::to_string(i + 1) + " is not an array");
        }
        std::vector<QuantizedScalar> row;
        for (std::size_t j = 0; j < row_json.size(); ++j) {
            const auto& cell = row_json[j];
            try {
                if (cell.is_number()) {
                    row.push_back(QuantizedScalar::from_double(cell.get<double>()));
                } else if (cell.is_string()) {
                    row.push_back(QuantizedScalar::parse(cell.get<std::string>()));
                } else {
                    throw ParseError("not a number");
                }
            } catch (const Error& e) {
                throw ParseError("JSON row " + std::to_string(i + 1) + ", column " +
                                 std::to_string(j + 1) + ": " + e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("JSON row " + std::to_string(i + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    return TupleDataset::from_rows(rows.front().size(), rows);
}

TupleDataset read_json_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_json(in);
}

void write_csv(std::ostream& out, const TupleDataset& dataset) {
    std::string line;
    for (std::size_t i = 0; i < dataset.m_rows(); ++i) {
        line.clear();
        auto row = dataset.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) line.push_back(',');
            row[j].render_to(line);
        }
        line.push_back('\n');
        out << line;
    }
}

void write_projection_csv(std::ostream& out, const DecompositionReport& report) {
    out << "dropped_col,coefficient,k_hat,raw_len\n";
    for (const auto& entry : report.per_projection) {
        out << entry.spec.dropped_cols().front() << ',' << entry.coefficient << ','
            << entry.estimate.k_hat << ',' << entry.estimate.raw_len << '\n';
    }
}

TupleDataset read_dataset_file(const std::string& path, bool skip_header) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return read_json_file(path);
    }
    return read_csv_file(path, skip_header);
}

}  // namespace kdecomp
