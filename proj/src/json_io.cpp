#include "banffkit/json_io.hpp"

#include <fstream>
#include <iostream>

namespace banffkit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw parse_error(where + ": " + what);
}

std::uint64_t get_uint(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        fail(where, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

}  // namespace

json group_to_json(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            return json{{"cyclic", spec.cyclic_order}};
        case GroupSpec::Kind::Field:
            return json{{"field", {{"p", spec.field.p},
                                   {"n", spec.field.n},
                                   {"modulus", spec.field.modulus}}}};
        case GroupSpec::Kind::Product: {
            json factors = json::array();
            for (const auto& f : spec.factors)
                factors.push_back(json{{"p", f.p}, {"n", f.n}, {"modulus", f.modulus}});
            return json{{"product", factors}};
        }
    }
    fail("group", "unknown kind");
}

namespace {

FieldSpec field_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("p"))
        fail(where, "expected an object with p, n, modulus");
    FieldSpec f;
    f.p = static_cast<std::uint32_t>(get_uint(j.at("p"), where + ".p"));
    f.n = j.contains("n") ? static_cast<unsigned>(get_uint(j.at("n"), where + ".n")) : 1;
    if (j.contains("modulus")) {
        if (!j.at("modulus").is_array()) fail(where + ".modulus", "expected an array");
        for (const auto& c : j.at("modulus"))
            f.modulus.push_back(
                static_cast<std::uint32_t>(get_uint(c, where + ".modulus[]")));
    }
    return f;
}

}  // namespace

GroupSpec group_from_json(const json& j) {
    if (!j.is_object()) fail("group", "expected an object");
    if (j.contains("cyclic"))
        return GroupSpec::cyclic(get_uint(j.at("cyclic"), "group.cyclic"));
    if (j.contains("field")) {
        FieldSpec f = field_from_json(j.at("field"), "group.field");
        return GroupSpec::make_field(f.p, f.n, f.modulus);
    }
    if (j.contains("product")) {
        if (!j.at("product").is_array()) fail("group.product", "expected an array");
        std::vector<FieldSpec> fs;
        for (const auto& e : j.at("product"))
            fs.push_back(field_from_json(e, "group.product[]"));
        return GroupSpec::product(std::move(fs));
    }
    fail("group", "expected one of cyclic/field/product");
}

json elem_to_json(const GroupPtr& g, Elem x) {
    if (!g || g->is_cyclic()) return json(x);
    if (g->is_field()) return json(g->coeffs(x));
    json parts = json::array();
    for (std::size_t i = 0; i < g->component_count(); ++i)
        parts.push_back(elem_to_json(g->component(i), g->component_of(x, i)));
    return parts;
}

Elem elem_from_json(const GroupPtr& g, const json& j) {
    if (!g || g->is_cyclic()) {
        std::uint64_t x = get_uint(j, "element");
        std::uint64_t order = g ? g->order() : UINT32_MAX;
        if (x >= order) fail("element", "index out of range");
        return static_cast<Elem>(x);
    }
    if (!j.is_array()) fail("element", "expected an array");
    if (g->is_field()) {
        std::vector<std::uint32_t> c;
        for (const auto& e : j)
            c.push_back(static_cast<std::uint32_t>(get_uint(e, "element[]")));
        if (c.size() != g->degree()) fail("element", "wrong coefficient count");
        return g->from_coeffs(c);
    }
    if (j.size() != g->component_count())
        fail("element", "wrong component count");
    std::vector<Elem> parts;
    for (std::size_t i = 0; i < g->component_count(); ++i)
        parts.push_back(elem_from_json(g->component(i), j[i]));
    return g->compose(parts);
}

json block_to_json(const GroupPtr& g, const Block& b) {
    json out = json::array();
    for (Elem x : b) out.push_back(elem_to_json(g, x));
    return out;
}

Block block_from_json(const GroupPtr& g, const json& j) {
    if (!j.is_array()) fail("block", "expected an array");
    Block b;
    for (const auto& e : j) b.push_back(elem_from_json(g, e));
    return normalize_block(std::move(b));
}

json df_to_json(const DifferenceFamily& f) {
    json blocks = json::array();
    for (const auto& b : f.blocks) blocks.push_back(block_to_json(f.group, b));
    return json{{"group", group_to_json(f.group->spec())},
                {"lambda", f.lambda},
                {"blocks", blocks}};
}

DifferenceFamily df_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("blocks"))
        fail("family", "expected an object with group and blocks");
    DifferenceFamily f;
    f.group = make_group(group_from_json(j.at("group")));
    f.lambda = j.contains("lambda")
                   ? static_cast<std::uint32_t>(get_uint(j.at("lambda"), "family.lambda"))
                   : 1;
    for (const auto& b : j.at("blocks"))
        f.blocks.push_back(block_from_json(f.group, b));
    return f;
}

json design_to_json(const Design& d) {
    if (d.group && !d.base_blocks.empty()) {
        json bases = json::array();
        for (const auto& b : d.base_blocks) bases.push_back(block_to_json(d.group, b));
        return json{{"group", group_to_json(d.group->spec())},
                    {"base_blocks", bases},
                    {"developed", true}};
    }
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(block_to_json(nullptr, b));
    return json{{"points", d.points}, {"blocks", blocks}};
}

Design design_from_json(const json& j) {
    if (!j.is_object()) fail("design", "expected an object");
    if (j.contains("group")) {
        GroupPtr g = make_group(group_from_json(j.at("group")));
        if (j.contains("base_blocks") && j.value("developed", true)) {
            DifferenceFamily f;
            f.group = g;
            for (const auto& b : j.at("base_blocks"))
                f.blocks.push_back(block_from_json(g, b));
            if (j.contains("lambda"))
                f.lambda = static_cast<std::uint32_t>(
                    get_uint(j.at("lambda"), "design.lambda"));
            else {
                // infer lambda from the parameter identity when possible
                std::uint64_t v = g->order();
                if (!f.blocks.empty() && v > 1) {
                    std::uint64_t k = f.blocks[0].size();
                    std::uint64_t num = k * (k - 1) * f.blocks.size();
                    if (num % (v - 1) == 0)
                        f.lambda = static_cast<std::uint32_t>(num / (v - 1));
                }
            }
            return develop(f, true);
        }
        if (j.contains("blocks")) {
            Design d;
            d.group = g;
            d.points = g->order();
            for (const auto& b : j.at("blocks"))
                d.blocks.push_back(block_from_json(g, b));
            return d;
        }
        fail("design", "group form needs base_blocks or blocks");
    }
    if (!j.contains("points") || !j.contains("blocks"))
        fail("design", "expected points and blocks");
    Design d;
    d.points = get_uint(j.at("points"), "design.points");
    for (const auto& b : j.at("blocks")) {
        Block blk = block_from_json(nullptr, b);
        for (Elem x : blk)
            if (x >= d.points) fail("design.blocks", "point index out of range");
        d.blocks.push_back(std::move(blk));
    }
    return d;
}

json coloring_to_json(const Coloring& c) {
    json pts = json::object(), blks = json::object();
    for (std::size_t i = 0; i < c.point_colors.size(); ++i)
        pts[std::to_string(i)] = c.point_colors[i];
    for (std::size_t i = 0; i < c.block_colors.size(); ++i)
        blks[std::to_string(i)] = c.block_colors[i];
    return json{{"point_colors", pts}, {"block_colors", blks}, {"palette", c.palette}};
}

Coloring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("point_colors") || !j.contains("block_colors"))
        fail("coloring", "expected point_colors and block_colors");
    auto read_map = [](const json& m, const std::string& where) {
        if (!m.is_object()) fail(where, "expected an object keyed by index");
        std::vector<std::uint32_t> out(m.size(), 0);
        std::vector<char> seen(m.size(), 0);
        for (auto it = m.begin(); it != m.end(); ++it) {
            std::size_t idx;
            try {
                idx = std::stoull(it.key());
            } catch (...) {
                fail(where, "non-numeric key '" + it.key() + "'");
            }
            if (idx >= out.size() || seen[idx])
                fail(where, "key '" + it.key() + "' out of range or repeated");
            seen[idx] = 1;
            out[idx] = static_cast<std::uint32_t>(get_uint(*it, where + "." + it.key()));
        }
        return out;
    };
    Coloring c;
    c.point_colors = read_map(j.at("point_colors"), "coloring.point_colors");
    c.block_colors = read_map(j.at("block_colors"), "coloring.block_colors");
    if (j.contains("palette"))
        c.palette = static_cast<std::uint32_t>(get_uint(j.at("palette"), "coloring.palette"));
    return c;
}

json nesting_to_json(const Nesting& n) {
    return json{{"design", design_to_json(n.sts)}, {"map", n.map}};
}

Nesting nesting_from_json(const json& j) {
    if (!j.is_object() || !j.contains("design") || !j.contains("map"))
        fail("nesting", "expected design and map");
    Nesting n;
    n.sts = design_from_json(j.at("design"));
    for (const auto& e : j.at("map")) {
        std::uint64_t p = get_uint(e, "nesting.map[]");
        if (p >= n.sts.points) fail("nesting.map", "point index out of range");
        n.map.push_back(static_cast<Elem>(p));
    }
    return n;
}

json banff_set_report_to_json(const BanffSetReport& r, const GroupPtr& field) {
    return json{{"q", r.q},
                {"k", r.k},
                {"set", block_to_json(field, r.set)},
                {"e", r.e},
                {"cond1_ok", r.cond1_ok},
                {"cond2_ok", r.cond2_ok},
                {"ok", r.ok},
                {"half_difference_classes", r.half_difference_classes}};
}

json bound_report_to_json(const BoundReport& r) {
    return json{{"v", r.v},
                {"k", r.k},
                {"lambda", r.lambda},
                {"b", r.b},
                {"r", r.r},
                {"m", r.m},
                {"point_bound", r.point_bound},
                {"edge_bound", r.edge_bound},
                {"replication_bound", r.replication_bound},
                {"max_bound", r.max_bound},
                {"banff_df_feasible", r.banff_df_feasible},
                {"weil_threshold", {{"value", r.weil.value}, {"exact", r.weil.exact}}}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(path, e.what());
    }
}

void dump_output(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(out_path, "cannot open for writing");
    out << j.dump(2) << "\n";
}

}  // namespace banffkit::io
