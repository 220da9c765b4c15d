#include "imh/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace imh {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

std::uint64_t parse_number(std::string_view word, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
    return value;
}

VertexId parse_vertex(std::string_view word, std::size_t n, std::size_t line) {
    const auto id = parse_number(word, line);
    if (id < 1 || id > n)
        throw ParseError(line, "vertex " + std::string(word) + " out of range 1.." + std::to_string(n));
    return static_cast<VertexId>(id - 1);
}

json edges_json(std::span<const Edge> edges) {
    json items = json::array();
    for (const Edge& e : edges)
        items.push_back({e.u, e.v});
    return items;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.contains(key))
        throw ParseError(0, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("field '") + key + "': " + e.what());
    }
}

std::string_view role_name(GadgetRole r) {
    switch (r) {
        case GadgetRole::ForK1: return "k1";
        case GadgetRole::ForK2: return "k2";
        case GadgetRole::Auxiliary: return "aux";
    }
    return "aux";
}

std::string_view side_name(Side s) { return s == Side::S1 ? "S1" : "S2"; }

json im_provenance(const ImReductionOutput& out) {
    json prov = json::array();
    for (const ImVertexInfo& info : out.provenance) {
        json unit;
        if (info.unit.kind == UnitKind::Gadget) {
            unit = {{"kind", "gadget"},
                    {"gadget", info.unit.owner},
                    {"pair", {info.unit.pair.first, info.unit.pair.second}},
                    {"role", role_name(info.unit.role)}};
        } else {
            unit = {{"kind", "connector"},
                    {"connector", info.unit.owner},
                    {"integer", info.unit.integer},
                    {"unit_index", info.unit.unit_index}};
        }
        prov.push_back({{"unit", unit},
                        {"unit_id", info.unit_id},
                        {"side", side_name(info.side)},
                        {"represents", info.represents}});
    }
    return prov;
}

json tagged(std::string_view role, std::size_t represents) {
    return {{"role", role}, {"represents", represents}};
}

json provenance_json(const AnyReduction& r) {
    json prov = json::array();
    std::visit(
        [&](const auto& out) {
            using T = std::decay_t<decltype(out)>;
            const std::size_t n = out.source.num_vertices();
            if constexpr (std::is_same_v<T, CliqueGapOutput>) {
                for (std::size_t v = 0; v < n; ++v)
                    prov.push_back(tagged("copy1", v));
                for (std::size_t v = 0; v < n; ++v)
                    prov.push_back(tagged("copy2", v));
                prov.push_back({{"role", "apex"}});
            } else if constexpr (std::is_same_v<T, ImReductionOutput>) {
                prov = im_provenance(out);
            } else if constexpr (std::is_same_v<T, ImageReductionOutput>) {
                for (std::size_t v = 0; v < n; ++v)
                    prov.push_back(tagged("source", v));
                for (std::size_t v = 0; v < n; ++v)
                    prov.push_back(tagged("image", v));
            } else if constexpr (std::is_same_v<T, HamClosureOutput>) {
                for (std::size_t v = 0; v < n; ++v)
                    prov.push_back(tagged("source", v));
                for (std::size_t i = 0; i < n; ++i)
                    prov.push_back({{"role", "added"}, {"index", i}});
            } else if constexpr (std::is_same_v<T, BlowupOutput>) {
                for (VertexId v = 0; v < out.graph.num_vertices(); ++v) {
                    const bool s_side = v < n * out.group_size;
                    prov.push_back({{"role", s_side ? "s" : "t"},
                                    {"represents", out.owner(v)},
                                    {"index", v % out.group_size},
                                    {"side", s_side ? "S1" : "S2"}});
                }
            } else {
                for (std::size_t v = 0; v < n; ++v)
                    prov.push_back({{"role", "source"}, {"represents", v}, {"side", side_name(out.graph.side(v))}});
                for (std::size_t i = 0; i < out.l_map.size(); ++i)
                    prov.push_back({{"role", "l"}, {"index", i}, {"side", "S1"}});
                for (std::size_t i = 0; i < out.m_map.size(); ++i)
                    prov.push_back({{"role", "m"}, {"index", i}, {"side", "S2"}});
            }
        },
        r);
    return prov;
}

json sidecar_json(const AnyReduction& r) {
    json j;
    j["format_version"] = kFormatVersion;
    j["reduction"] = to_string(kind_of(r));
    j["source"] = emit_graph(source_graph(r));
    j["vertices"] = reduced_graph(r).num_vertices();
    std::visit(
        [&](const auto& out) {
            using T = std::decay_t<decltype(out)>;
            if constexpr (std::is_same_v<T, CliqueGapOutput> || std::is_same_v<T, ImReductionOutput>) {
                j["k"] = out.k;
                j["target"] = out.target;
            }
            if constexpr (requires { out.ham_cycle; })
                j["ham_cycle"] = out.ham_cycle;
        },
        r);
    j["provenance"] = provenance_json(r);
    return j;
}

AnyReduction load_sidecar_json(const json& j, const Graph* reduced) {
    check_version(field<std::string>(j, "format_version"));
    const ReductionKind kind = reduction_kind_from(field<std::string>(j, "reduction"));
    const Graph source = parse_graph(field<std::string>(j, "source"));
    const std::size_t k = j.contains("k") ? field<std::size_t>(j, "k") : 0;
    AnyReduction r = run_reduction(kind, source, k);
    if (reduced) {
        // Side labels are optional on the DIMACS side.
        const Graph& rebuilt = reduced_graph(r);
        if (rebuilt.num_vertices() != reduced->num_vertices() || rebuilt.edges() != reduced->edges() ||
            (reduced->sides() && reduced->sides() != rebuilt.sides()))
            throw ParseError(0, "graph does not match the reduction described by its sidecar");
    }
    return r;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::size_t n = 0;
    std::size_t declared_edges = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::map<VertexId, Side> sides;
    std::size_t last_line = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto words = split_words(line);
        if (words.empty() || words[0] == "c")
            continue;
        last_line = line_no;
        if (words[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "second header line");
            if (words.size() != 4 || words[1] != "edge")
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = parse_number(words[2], line_no);
            declared_edges = parse_number(words[3], line_no);
            have_header = true;
        } else if (words[0] == "e") {
            if (!have_header)
                throw ParseError(line_no, "edge line before the header");
            if (words.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            const VertexId a = parse_vertex(words[1], n, line_no);
            const VertexId b = parse_vertex(words[2], n, line_no);
            if (a == b)
                throw ParseError(line_no, "self-loop on vertex " + std::string(words[1]));
            const Edge e(a, b);
            if (!seen.insert(e).second)
                throw ParseError(line_no, "duplicate edge " + std::string(words[1]) + " " + std::string(words[2]));
            edges.push_back(e);
        } else if (words[0] == "s") {
            if (!have_header)
                throw ParseError(line_no, "side line before the header");
            if (words.size() != 3 || (words[2] != "1" && words[2] != "2"))
                throw ParseError(line_no, "malformed side line, expected 's <u> <1|2>'");
            const VertexId v = parse_vertex(words[1], n, line_no);
            if (!sides.emplace(v, words[2] == "1" ? Side::S1 : Side::S2).second)
                throw ParseError(line_no, "second side label for vertex " + std::string(words[1]));
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(words[0]) + "'");
        }
    }
    if (!have_header)
        throw ParseError(0, "missing 'p edge' header");
    if (edges.size() != declared_edges)
        throw ParseError(last_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                        std::to_string(edges.size()));
    std::optional<Sides> labels;
    if (!sides.empty()) {
        if (sides.size() != n)
            throw ParseError(last_line, "side labels given for " + std::to_string(sides.size()) + " of " +
                                            std::to_string(n) + " vertices");
        labels.emplace();
        for (const auto& [v, s] : sides)
            labels->push_back(s);
    }
    try {
        return Graph(n, std::move(edges), std::move(labels));
    } catch (const PreconditionError& e) {
        throw ParseError(0, e.what());
    }
}

std::string emit_graph(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges())
        os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    if (g.sides())
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            os << "s " << v + 1 << ' ' << (g.side(v) == Side::S1 ? 1 : 2) << '\n';
    return os.str();
}

std::string_view to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Clique: return "clique";
        case WitnessKind::Mis: return "mis";
        case WitnessKind::Mim: return "mim";
        case WitnessKind::Cycle: return "cycle";
    }
    return "clique";
}

WitnessKind witness_kind_from(std::string_view s) {
    for (auto k : {WitnessKind::Clique, WitnessKind::Mis, WitnessKind::Mim, WitnessKind::Cycle})
        if (to_string(k) == s)
            return k;
    throw ParseError(0, "unknown witness kind '" + std::string(s) + "'");
}

std::string emit_witness(const Witness& w) {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = to_string(w.kind);
    j["items"] = w.kind == WitnessKind::Mim ? edges_json(w.edges) : json(w.vertices);
    return j.dump();
}

Witness parse_witness(std::string_view text) {
    const json j = parse_json(text);
    check_version(field<std::string>(j, "format_version"));
    Witness w;
    w.kind = witness_kind_from(field<std::string>(j, "kind"));
    try {
        if (w.kind == WitnessKind::Mim) {
            for (const auto& item : j.at("items")) {
                const auto pair = item.get<std::vector<VertexId>>();
                if (pair.size() != 2)
                    throw ParseError(0, "mim items must be [u,v] pairs");
                w.edges.emplace_back(pair[0], pair[1]);
            }
        } else {
            w.vertices = j.at("items").get<VertexSet>();
        }
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("witness items: ") + e.what());
    }
    return w;
}

std::string_view to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::CliqueGap: return "clique-gap";
        case ReductionKind::ImHard: return "im-hard";
        case ReductionKind::Image: return "image";
        case ReductionKind::HamClosure: return "ham-closure";
        case ReductionKind::Blowup: return "blowup";
        case ReductionKind::HamBipClosure: return "hambip-closure";
    }
    return "image";
}

ReductionKind reduction_kind_from(std::string_view s) {
    for (auto k : {ReductionKind::CliqueGap, ReductionKind::ImHard, ReductionKind::Image, ReductionKind::HamClosure,
                   ReductionKind::Blowup, ReductionKind::HamBipClosure})
        if (to_string(k) == s)
            return k;
    throw ParseError(0, "unknown reduction '" + std::string(s) + "'");
}

AnyReduction run_reduction(ReductionKind kind, const Graph& source, std::size_t k) {
    switch (kind) {
        case ReductionKind::CliqueGap: return clique_gap_reduce(source, k);
        case ReductionKind::ImHard: return build_h(source, k);
        case ReductionKind::Image: return image_reduce(source);
        case ReductionKind::HamClosure: return ham_closure_reduce(source);
        case ReductionKind::Blowup: return blowup_reduce(source);
        case ReductionKind::HamBipClosure: return hambip_closure_reduce(source);
    }
    throw PreconditionError("unknown reduction kind");
}

ReductionKind kind_of(const AnyReduction& r) { return static_cast<ReductionKind>(r.index()); }

const Graph& reduced_graph(const AnyReduction& r) {
    return std::visit([](const auto& out) -> const Graph& { return out.graph; }, r);
}

const Graph& source_graph(const AnyReduction& r) {
    return std::visit([](const auto& out) -> const Graph& { return out.source; }, r);
}

std::string emit_sidecar(const AnyReduction& r) { return sidecar_json(r).dump(); }

AnyReduction load_sidecar(std::string_view text, const Graph* reduced) {
    return load_sidecar_json(parse_json(text), reduced);
}

std::string emit_bundle(const AnyReduction& r) {
    json j;
    j["format_version"] = kFormatVersion;
    j["graph"] = emit_graph(reduced_graph(r));
    j["sidecar"] = sidecar_json(r);
    return j.dump();
}

AnyReduction load_bundle(std::string_view text) {
    const json j = parse_json(text);
    check_version(field<std::string>(j, "format_version"));
    const Graph g = parse_graph(field<std::string>(j, "graph"));
    if (!j.contains("sidecar"))
        throw ParseError(0, "missing field 'sidecar'");
    return load_sidecar_json(j.at("sidecar"), &g);
}

std::string emit_reduced_graph(const AnyReduction& r) {
    json header;
    header["format_version"] = kFormatVersion;
    header["reduction"] = to_string(kind_of(r));
    header["source"] = emit_graph(source_graph(r));
    std::visit(
        [&](const auto& out) {
            if constexpr (std::is_same_v<std::decay_t<decltype(out)>, CliqueGapOutput> ||
                          std::is_same_v<std::decay_t<decltype(out)>, ImReductionOutput>) {
                header["k"] = out.k;
                header["target"] = out.target;
            }
        },
        r);
    return "c imh-reduction " + header.dump() + "\n" + emit_graph(reduced_graph(r));
}

std::optional<AnyReduction> load_reduction(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw ParseError(0, "empty input");
    if (text[first] == '{') {
        const json j = parse_json(text);
        if (j.contains("sidecar")) {
            check_version(field<std::string>(j, "format_version"));
            const Graph g = parse_graph(field<std::string>(j, "graph"));
            return load_sidecar_json(j.at("sidecar"), &g);
        }
        return load_sidecar_json(j, nullptr);
    }
    constexpr std::string_view tag = "c imh-reduction ";
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        if (line.substr(0, tag.size()) == tag) {
            const Graph g = parse_graph(text);
            return load_sidecar_json(parse_json(line.substr(tag.size())), &g);
        }
        pos = end + 1;
    }
    return std::nullopt;
}

void check_version(std::string_view found) {
    if (found != kFormatVersion)
        throw VersionError("format version mismatch: expected " + std::string(kFormatVersion) + ", found " +
                           std::string(found));
}

}  // namespace imh
