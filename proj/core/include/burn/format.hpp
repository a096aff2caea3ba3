#pragma once

#include <string>
#include <string_view>

#include "burn/hypergraph.hpp"

namespace burn {

/// Parse the canonical instance text. Grammar (UTF-8, LF):
///
///   line        := comment | vertex-decl | edge-decl
///   comment     := "#" any-text
///   vertex-decl := "v" WS label          (declares a possibly-isolated vertex)
///   edge-decl   := "e" (WS label)*       (zero labels = empty edge)
///   label       := [A-Za-z0-9_.-]+
///
/// Vertices are auto-declared on first appearance in an edge. Indices are
/// assigned in order of first appearance. Throws ParseError on a repeated
/// label within one edge line, an unknown directive, a duplicate vertex
/// declaration, or an instance with no vertices at all.
Hypergraph parse_hypergraph(std::string_view text);

/// Canonical serialization: all "v" lines sorted by label, then all "e" lines
/// with members in label-sorted order, edges sorted lexicographically.
/// Byte-identical output for structurally equal inputs, and
/// parse(serialize(h)) is structurally equal to h.
std::string serialize_hypergraph(const Hypergraph& h);

/// Equality as labeled hypergraphs, ignoring the index assignment.
bool structurally_equal(const Hypergraph& a, const Hypergraph& b);

} // namespace burn
