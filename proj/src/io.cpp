#include "hbck/io.hpp"

#include "hbck/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hbck::io {

using Json = nlohmann::ordered_json;

const HyperBCK& algebra_of(const Structure& s) noexcept
{
    if (const auto* f = std::get_if<FuzzyHyperBCK>(&s)) {
        return f->alg();
    }
    return std::get<HyperBCK>(s);
}

FuzzyHyperBCK as_fuzzy(const Structure& s)
{
    if (const auto* f = std::get_if<FuzzyHyperBCK>(&s)) {
        return *f;
    }
    const auto& alg = std::get<HyperBCK>(s);
    return FuzzyHyperBCK(alg, std::vector<FuzzyValue>(alg.size(), FuzzyValue::one()));
}

namespace {

struct Position {
    std::size_t line = 0;
    std::size_t column = 0;
};

Position position_of_offset(std::string_view text, std::size_t offset)
{
    Position pos{1, 1};
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

// Locates the first occurrence of "needle" (quoted) after "section" (quoted).
Position locate(std::string_view text, std::string_view section, std::string_view needle)
{
    std::size_t from = 0;
    if (!section.empty()) {
        const auto s = text.find("\"" + std::string(section) + "\"");
        if (s == std::string_view::npos) {
            return {};
        }
        from = s + section.size() + 2;
    }
    if (needle.empty()) {
        return position_of_offset(text, from);
    }
    const auto at = text.find("\"" + std::string(needle) + "\"", from);
    if (at == std::string_view::npos) {
        return {};
    }
    return position_of_offset(text, at);
}

[[noreturn]] void fail(ErrorCode code, const std::string& message, Position pos)
{
    if (pos.line != 0) {
        throw InputError(code, message + " (line " + std::to_string(pos.line) + ", column " +
                                   std::to_string(pos.column) + ")",
                         pos.line, pos.column);
    }
    throw InputError(code, message);
}

const Json& field(const Json& doc, const char* name)
{
    if (!doc.is_object()) {
        fail(ErrorCode::Syntax, "document must be a JSON object", {1, 1});
    }
    const auto it = doc.find(name);
    if (it == doc.end()) {
        fail(ErrorCode::MissingField, std::string("missing field '") + name + "'", {});
    }
    return *it;
}

std::string string_value(const Json& value, std::string_view what, std::string_view text, std::string_view section,
                         std::string_view key)
{
    if (!value.is_string()) {
        fail(ErrorCode::Syntax, std::string(what) + " must be a string", locate(text, section, key));
    }
    return value.get<std::string>();
}

Structure structure_from_json(const Json& doc, std::string_view text)
{
    const auto& carrier_json = field(doc, "carrier");
    if (!carrier_json.is_array() || carrier_json.empty()) {
        fail(ErrorCode::Syntax, "'carrier' must be a non-empty array of labels", locate(text, "carrier", ""));
    }
    std::vector<std::string> labels;
    for (const auto& l : carrier_json) {
        labels.push_back(string_value(l, "carrier label", text, "carrier", ""));
    }
    const auto zero_label = string_value(field(doc, "zero"), "'zero'", text, "zero", "");

    std::optional<Carrier> carrier;
    try {
        auto zero = std::find(labels.begin(), labels.end(), zero_label);
        if (zero == labels.end()) {
            fail(ErrorCode::UnknownLabel, "zero '" + zero_label + "' is not a carrier label",
                 locate(text, "zero", zero_label));
        }
        carrier.emplace(labels, static_cast<Element>(zero - labels.begin()));
    } catch (const InputError& e) {
        if (e.line() != 0) {
            throw;
        }
        fail(e.code(), e.what(), locate(text, "carrier", ""));
    }
    const auto n = carrier->size();

    const auto& table_json = field(doc, "table");
    if (!table_json.is_object()) {
        fail(ErrorCode::Syntax, "'table' must be an object keyed by \"x,y\"", locate(text, "table", ""));
    }
    std::vector<Subset> table(n * n);
    std::vector<bool> seen(n * n, false);
    for (const auto& [key, cell] : table_json.items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos) {
            fail(ErrorCode::Syntax, "table key '" + key + "' is not of the form \"x,y\"", locate(text, "table", key));
        }
        const auto x = carrier->find(key.substr(0, comma));
        const auto y = carrier->find(key.substr(comma + 1));
        if (!x || !y) {
            fail(ErrorCode::UnknownLabel, "table key '" + key + "' names an undeclared element",
                 locate(text, "table", key));
        }
        const auto index = *x * n + *y;
        if (seen[index]) {
            fail(ErrorCode::Syntax, "duplicate table key '" + key + "'", locate(text, "table", key));
        }
        seen[index] = true;
        if (!cell.is_array()) {
            fail(ErrorCode::Syntax, "cell '" + key + "' must be an array of labels", locate(text, "table", key));
        }
        if (cell.empty()) {
            fail(ErrorCode::EmptyCell, "empty hyperoperation cell '" + key + "'", locate(text, "table", key));
        }
        Subset value;
        for (const auto& member : cell) {
            const auto label = string_value(member, "cell member", text, "table", key);
            const auto t = carrier->find(label);
            if (!t) {
                fail(ErrorCode::UnknownLabel, "cell '" + key + "' references undeclared element '" + label + "'",
                     locate(text, "table", key));
            }
            value.insert(*t);
        }
        table[index] = value;
    }
    for (std::size_t i = 0; i < n * n; ++i) {
        if (!seen[i]) {
            fail(ErrorCode::NonTotalTable,
                 "table has no cell for \"" + carrier->label(i / n) + "," + carrier->label(i % n) + "\"",
                 locate(text, "table", ""));
        }
    }
    HyperBCK alg(*carrier, std::move(table));

    const auto mu_it = doc.find("mu");
    if (mu_it == doc.end()) {
        return alg;
    }
    if (!mu_it->is_object()) {
        fail(ErrorCode::Syntax, "'mu' must be an object keyed by label", locate(text, "mu", ""));
    }
    std::vector<std::optional<FuzzyValue>> mu(n);
    for (const auto& [label, value] : mu_it->items()) {
        const auto x = carrier->find(label);
        if (!x) {
            fail(ErrorCode::UnknownLabel, "mu assigns undeclared element '" + label + "'", locate(text, "mu", label));
        }
        if (mu[*x]) {
            fail(ErrorCode::Syntax, "duplicate mu entry for '" + label + "'", locate(text, "mu", label));
        }
        const auto raw = string_value(value, "mu value", text, "mu", label);
        try {
            mu[*x] = FuzzyValue::parse(raw);
        } catch (const InputError& e) {
            fail(e.code(), "mu(" + label + "): " + e.what(), locate(text, "mu", label));
        }
    }
    std::vector<FuzzyValue> values;
    for (std::size_t i = 0; i < n; ++i) {
        if (!mu[i]) {
            fail(ErrorCode::MuIncomplete, "mu has no value for '" + carrier->label(i) + "'", locate(text, "mu", ""));
        }
        values.push_back(*mu[i]);
    }
    return FuzzyHyperBCK(std::move(alg), std::move(values));
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        const auto pos = position_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
        fail(ErrorCode::Syntax, "malformed JSON", pos);
    }
}

Json to_json(const HyperBCK& alg, const std::vector<FuzzyValue>* mu)
{
    const auto& c = alg.carrier();
    Json doc = Json::object();
    doc["carrier"] = c.labels();
    doc["zero"] = c.label(c.zero());
    Json table = Json::object();
    for (Element x = 0; x < alg.size(); ++x) {
        for (Element y = 0; y < alg.size(); ++y) {
            Json cell = Json::array();
            for (auto t : alg.star(x, y)) {
                cell.push_back(c.label(t));
            }
            table[c.label(x) + "," + c.label(y)] = std::move(cell);
        }
    }
    doc["table"] = std::move(table);
    if (mu != nullptr) {
        Json m = Json::object();
        for (Element x = 0; x < alg.size(); ++x) {
            m[c.label(x)] = (*mu)[x].to_string();
        }
        doc["mu"] = std::move(m);
    }
    return doc;
}

Json to_json(const Structure& s)
{
    if (const auto* f = std::get_if<FuzzyHyperBCK>(&s)) {
        return to_json(f->alg(), &f->mu());
    }
    return to_json(std::get<HyperBCK>(s), nullptr);
}

std::string dump(const Json& doc, Layout layout)
{
    return layout == Layout::Pretty ? doc.dump(2) + "\n" : doc.dump();
}

Structure embedded_structure(const Json& node, const char* name, std::string_view text,
                             const std::filesystem::path& base_dir)
{
    if (node.is_string()) {
        const auto path = base_dir / node.get<std::string>();
        return parse_structure(read_file(path));
    }
    if (node.is_object()) {
        return structure_from_json(node, text);
    }
    fail(ErrorCode::Syntax, std::string("'") + name + "' must be a structure object or a file path",
         locate(text, name, ""));
}

} // namespace

Structure parse_structure(std::string_view text)
{
    return structure_from_json(parse_json(text), text);
}

std::string render_structure(const HyperBCK& alg, Layout layout)
{
    return dump(to_json(alg, nullptr), layout);
}

std::string render_structure(const FuzzyHyperBCK& f, Layout layout)
{
    return dump(to_json(f.alg(), &f.mu()), layout);
}

std::string render_structure(const Structure& s, Layout layout)
{
    return dump(to_json(s), layout);
}

MorphismDocument parse_morphism(std::string_view text, const std::filesystem::path& base_dir)
{
    const auto doc = parse_json(text);
    auto source = embedded_structure(field(doc, "source"), "source", text, base_dir);
    auto target = embedded_structure(field(doc, "target"), "target", text, base_dir);
    const auto& src = algebra_of(source).carrier();
    const auto& dst = algebra_of(target).carrier();

    const auto& map_json = field(doc, "map");
    if (!map_json.is_object()) {
        fail(ErrorCode::Syntax, "'map' must be an object from source to target labels", locate(text, "map", ""));
    }
    std::vector<std::optional<Element>> map(src.size());
    for (const auto& [from, to] : map_json.items()) {
        const auto x = src.find(from);
        if (!x) {
            fail(ErrorCode::UnknownLabel, "map sends undeclared source element '" + from + "'",
                 locate(text, "map", from));
        }
        const auto label = string_value(to, "map value", text, "map", from);
        const auto y = dst.find(label);
        if (!y) {
            fail(ErrorCode::UnknownLabel, "map sends '" + from + "' to undeclared target element '" + label + "'",
                 locate(text, "map", from));
        }
        map[*x] = *y;
    }
    ElementMap total;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (!map[i]) {
            fail(ErrorCode::NonTotalTable, "map has no image for '" + src.label(i) + "'", locate(text, "map", ""));
        }
        total.push_back(*map[i]);
    }
    return {std::move(source), std::move(target), std::move(total)};
}

std::string render_morphism(const FuzzyHom& f, Layout layout)
{
    Json doc = Json::object();
    doc["source"] = to_json(f.source.alg(), &f.source.mu());
    doc["target"] = to_json(f.target.alg(), &f.target.mu());
    Json map = Json::object();
    for (Element x = 0; x < f.map.size(); ++x) {
        map[f.source.alg().carrier().label(x)] = f.target.alg().carrier().label(f.map[x]);
    }
    doc["map"] = std::move(map);
    return dump(doc, layout);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(ErrorCode::Io, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace hbck::io
