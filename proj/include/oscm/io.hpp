#ifndef OSCM_IO_HPP
#define OSCM_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oscm/instance.hpp"

namespace oscm {

// Instance text format:
//   c <comment>                       (optional, anywhere)
//   p ocr <n_fixed> <n_free> <m>      (exactly one header line)
//   <a> <b>                           (m edge lines)
// with 1-based external ids: a in [1, n_fixed] is the fixed vertex at pi1
// position a-1, b in [n_fixed+1, n_fixed+n_free] is free id b-n_fixed-1.
// Whitespace-tolerant; edge line order irrelevant.
//
// Ordering text format: one free-vertex external id per line, a permutation
// of n_fixed+1 .. n_fixed+n_free.

enum class ParseErrorKind {
    missing_header,
    duplicate_header,
    bad_header,
    malformed_line,
    id_out_of_range,
    duplicate_edge,
    edge_count_mismatch,
    unknown_id,
    not_a_permutation,
};

const char* parse_error_kind_name(ParseErrorKind k);

class ParseError : public std::runtime_error {
   public:
    ParseError(ParseErrorKind kind, int line, const std::string& message);
    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

   private:
    ParseErrorKind kind_;
    int line_;
};

// Parsed file with comments preserved. Conversion to Instance drops them;
// Instance equality stays structural.
struct InstanceDocument {
    std::vector<std::string> comments;
    vertex_t n_fixed = 0;
    vertex_t n_free = 0;
    std::vector<Edge> edges;
};

InstanceDocument parse_instance_document(std::string_view text);
Instance to_instance(const InstanceDocument& doc);
Instance parse_instance(std::string_view text);

// Canonical form: header, then edges sorted by (fixed, free). Inverse of
// parse_instance up to comment stripping.
std::string serialize_instance(const Instance& inst);

Ordering parse_ordering(std::string_view text, const Instance& inst);
std::string serialize_ordering(const Ordering& ord, const Instance& inst);

// Standalone SVG of the two-layer drawing: fixed layer as the left column in
// pi1 order (top = position 0), free layer right in `ord` order, straight
// segments per edge, labels, and a title line reporting count_crossings.
// Fixed layout constants; integer coordinates; byte-deterministic.
std::string emit_two_layer_svg(const Instance& inst, const Ordering& ord);

}  // namespace oscm

#endif
