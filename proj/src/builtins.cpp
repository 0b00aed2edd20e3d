#include "talex/builtins.hpp"

#include <map>

namespace talex {

namespace {

const std::map<std::string, std::string>& builtin_table() {
    static const std::map<std::string, std::string> table = {
        {"trefoil",
         "knot trefoil\n"
         "lin genus=1\n"
         "pair: x1 | x1 x2^-1\n"
         "pair: x2^-1 x1 | x2^-1\n"},
        {"figure8",
         "knot figure8\n"
         "lin genus=1\n"
         "pair: x1 | x1 x2^-1\n"
         "pair: x2 x1 | x2\n"},
        {"5_1",
         "knot 5_1\n"
         "lin genus=2\n"
         "pair: x1 | x1 x2^-1\n"
         "pair: x2^-1 x1 | x3 x2^-1\n"
         "pair: x2^-1 x3 | x3 x4^-1\n"
         "pair: x4^-1 x3 | x4^-1\n"},
        {"5_2",
         "knot 5_2\n"
         "lin genus=1\n"
         "pair: x1 | x1 x2^-1\n"
         "pair: x2^-2 x1 | x2^-2\n"},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, source] : builtin_table()) v.push_back(name);
        return v;
    }();
    return names;
}

const std::string& builtin_source(const std::string& name) {
    auto it = builtin_table().find(name);
    if (it == builtin_table().end()) throw Error("unknown built-in knot '" + name + "'");
    return it->second;
}

KnotInput builtin(const std::string& name) {
    return parse_input(builtin_source(name));
}

}  // namespace talex
