#ifndef BANFFKIT_JSON_IO_HPP
#define BANFFKIT_JSON_IO_HPP

#include <json.hpp>

#include "banffkit/bounds.hpp"
#include "banffkit/constructions.hpp"

namespace banffkit::io {

using json = nlohmann::ordered_json;

// Thrown on malformed input documents; message carries a JSON-pointer-ish
// location (CLI exit code 2).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json group_to_json(const GroupSpec& spec);
GroupSpec group_from_json(const json& j);

// Elements: integer (cyclic), coefficient array low-to-high (field),
// array of component encodings (product). A null group means an explicit
// point set; elements are then plain integers.
json elem_to_json(const GroupPtr& g, Elem x);
Elem elem_from_json(const GroupPtr& g, const json& j);

json block_to_json(const GroupPtr& g, const Block& b);
Block block_from_json(const GroupPtr& g, const json& j);

json df_to_json(const DifferenceFamily& f);
DifferenceFamily df_from_json(const json& j);

json design_to_json(const Design& d);
Design design_from_json(const json& j);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json nesting_to_json(const Nesting& n);
Nesting nesting_from_json(const json& j);

json banff_set_report_to_json(const BanffSetReport& r, const GroupPtr& field);
json bound_report_to_json(const BoundReport& r);

json load_file(const std::string& path);
void dump_output(const json& j, const std::string& out_path);  // "" = stdout

}  // namespace banffkit::io

#endif
