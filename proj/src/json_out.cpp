#include "cnsparse/json_out.hpp"

#include <cmath>
#include <cstdio>

namespace cnsparse {

namespace {

void dump(const nlohmann::json& v, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (v.type()) {
        case nlohmann::json::value_t::object: {
            if (v.empty()) { out += "{}"; return; }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = v.begin(); it != v.end(); ++it, ++i) {
                out += pad_in;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                dump(it.value(), out, indent, depth + 1);
                if (i + 1 < v.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (v.empty()) { out += "[]"; return; }
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out += pad_in;
                dump(v[i], out, indent, depth + 1);
                if (i + 1 < v.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            return;
        }
        case nlohmann::json::value_t::number_float: {
            double d = v.get<double>();
            if (!std::isfinite(d)) { out += "null"; return; }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", d);
            out += buf;
            // bare integers like "3" stay valid JSON numbers either way
            return;
        }
        default:
            out += v.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const nlohmann::json& value, int indent) {
    std::string out;
    dump(value, out, indent, 0);
    return out;
}

}  // namespace cnsparse
