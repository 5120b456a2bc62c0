#include "kdecomp/codec.hpp"

#include <vector>

#include "kdecomp/error.hpp"

namespace kdecomp {

namespace {

void append_header(std::string& out, std::uint64_t body_len) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<char>((body_len >> shift) & 0xff));
    }
}

std::uint64_t read_header(std::string_view payload) {
    std::uint64_t len = 0;
    for (std::size_t i = 0; i < EncodedBlob::kHeaderSize; ++i) {
        len = (len << 8) | static_cast<unsigned char>(payload[i]);
    }
    return len;
}

}  // namespace

std::uint64_t EncodedBlob::body_len() const {
    return read_header(payload);
}

EncodedBlob encode(const TupleDataset& dataset) {
    std::string body;
    // ~10 bytes per scalar plus separators; close enough to avoid regrowth.
    body.reserve(2 + dataset.m_rows() * (dataset.n_cols() * 11 + 2));
    body.push_back('(');
    for (std::size_t i = 0; i < dataset.m_rows(); ++i) {
        if (i > 0) body.push_back(',');
        body.push_back('(');
        auto row = dataset.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) body.push_back(',');
            row[j].render_to(body);
        }
        body.push_back(')');
    }
    body.push_back(')');

    EncodedBlob blob;
    blob.payload.reserve(EncodedBlob::kHeaderSize + body.size());
    append_header(blob.payload, body.size());
    blob.payload += body;
    blob.declared_len = blob.payload.size();
    return blob;
}

EncodedBlob encode_bytes(std::string_view raw) {
    EncodedBlob blob;
    blob.payload.reserve(EncodedBlob::kHeaderSize + raw.size());
    append_header(blob.payload, raw.size());
    blob.payload += raw;
    blob.declared_len = blob.payload.size();
    return blob;
}

EncodedBlob blob_from_payload(std::string payload) {
    if (payload.size() < EncodedBlob::kHeaderSize) {
        throw ParseError("payload shorter than the 8-byte length header");
    }
    std::uint64_t declared = read_header(payload);
    if (declared != payload.size() - EncodedBlob::kHeaderSize) {
        throw ParseError("declared body length " + std::to_string(declared) +
                         " does not match actual body length " +
                         std::to_string(payload.size() - EncodedBlob::kHeaderSize));
    }
    EncodedBlob blob;
    blob.payload = std::move(payload);
    blob.declared_len = blob.payload.size();
    return blob;
}

namespace {

class BodyParser {
  public:
    explicit BodyParser(std::string_view body) : body_(body) {}

    TupleDataset parse(std::size_t n_cols_if_empty) {
        expect('(');
        if (peek() == ')') {  // empty dataset
            ++pos_;
            expect_end();
            return TupleDataset(n_cols_if_empty);
        }

        std::vector<std::vector<QuantizedScalar>> rows;
        rows.push_back(parse_row());
        while (peek() == ',') {
            ++pos_;
            rows.push_back(parse_row());
            if (rows.back().size() != rows.front().size()) {
                throw ParseError("row " + std::to_string(rows.size()) + " has " +
                                 std::to_string(rows.back().size()) + " entries, expected " +
                                 std::to_string(rows.front().size()));
            }
        }
        expect(')');
        expect_end();
        return TupleDataset::from_rows(rows.front().size(), rows);
    }

  private:
    std::vector<QuantizedScalar> parse_row() {
        expect('(');
        std::vector<QuantizedScalar> row;
        row.push_back(parse_scalar());
        while (peek() == ',') {
            ++pos_;
            row.push_back(parse_scalar());
        }
        expect(')');
        return row;
    }

    QuantizedScalar parse_scalar() {
        std::size_t start = pos_;
        while (pos_ < body_.size() && body_[pos_] != ',' && body_[pos_] != ')') ++pos_;
        return QuantizedScalar::parse(body_.substr(start, pos_ - start));
    }

    char peek() const {
        if (pos_ >= body_.size()) throw ParseError("unexpected end of blob body");
        return body_[pos_];
    }

    void expect(char c) {
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "' at body offset " +
                             std::to_string(pos_));
        }
        ++pos_;
    }

    void expect_end() const {
        if (pos_ != body_.size()) {
            throw ParseError("trailing bytes after dataset body");
        }
    }

    std::string_view body_;
    std::size_t pos_ = 0;
};

}  // namespace

TupleDataset decode(const EncodedBlob& blob, std::size_t n_cols_if_empty) {
    if (blob.payload.size() < EncodedBlob::kHeaderSize) {
        throw ParseError("payload shorter than the 8-byte length header");
    }
    if (blob.body_len() != blob.body().size()) {
        throw ParseError("header declares " + std::to_string(blob.body_len()) +
                         " body bytes, payload carries " + std::to_string(blob.body().size()));
    }
    return BodyParser(blob.body()).parse(n_cols_if_empty);
}

}  // namespace kdecomp
