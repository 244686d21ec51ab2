#ifndef HBCK_IO_HPP
#define HBCK_IO_HPP

#include "hbck/construction.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hbck::io {

/// A parsed structure document: crisp when it has no "mu" block.
using Structure = std::variant<HyperBCK, FuzzyHyperBCK>;

const HyperBCK& algebra_of(const Structure& s) noexcept;

/// Crisp structures are lifted with mu identically 1, under which every
/// homomorphism between them satisfies the fuzzy inequality.
FuzzyHyperBCK as_fuzzy(const Structure& s);

/// Parses the JSON structure format (see docs/format.md). Throws InputError
/// with a distinct code per failure and, where it can be located, the 1-based
/// line and column of the offending text. Axioms are not checked.
Structure parse_structure(std::string_view text);

enum class Layout { Pretty, Compact };

/// Deterministic rendering; parse_structure(render_structure(s)) == s.
std::string render_structure(const HyperBCK& alg, Layout layout = Layout::Pretty);
std::string render_structure(const FuzzyHyperBCK& f, Layout layout = Layout::Pretty);
std::string render_structure(const Structure& s, Layout layout = Layout::Pretty);

struct MorphismDocument {
    Structure source;
    Structure target;
    ElementMap map;
};

/// {"source": S, "target": T, "map": {"x": "y", ...}} where S and T are
/// structure documents inlined as objects or given as file paths, resolved
/// against `base_dir`. Throws InputError.
MorphismDocument parse_morphism(std::string_view text, const std::filesystem::path& base_dir = {});

std::string render_morphism(const FuzzyHom& f, Layout layout = Layout::Pretty);

/// Reads a file, throwing InputError(Io) when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

} // namespace hbck::io

#endif // HBCK_IO_HPP
