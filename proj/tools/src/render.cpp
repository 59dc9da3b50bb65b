#include <algorithm>
#include <sstream>

#include "sgm/cli/cli.hpp"

namespace sgm::cli {

namespace {

bool is_int_key(const std::string& k)
{
    return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_graded_module(const Json& j)
{
    if (!j.is_object() || j.empty()) return false;
    for (const auto& [k, v] : j.items())
        if (!is_int_key(k) || !v.is_object() || v.size() != 2 || !v.contains("rank") || !v.contains("torsion"))
            return false;
    return true;
}

std::string scalar(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

std::string inline_str(const Json& j)
{
    if (is_graded_module(j)) {
        std::string out;
        for (const auto& [k, v] : j.items()) {
            if (!out.empty()) out += "  ";
            out += k + ":" + v.at("rank").dump();
            if (!v.at("torsion").empty()) {
                out += " tors(";
                for (std::size_t i = 0; i < v.at("torsion").size(); ++i)
                    out += (i ? "," : "") + v.at("torsion")[i].dump();
                out += ")";
            }
        }
        return out;
    }
    if (j.is_object()) {
        if (j.empty()) return "none";
        std::string out;
        for (const auto& [k, v] : j.items()) out += (out.empty() ? "" : " ") + k + ":" + inline_str(v);
        return out;
    }
    if (j.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_str(j[i]);
        return out + "]";
    }
    return scalar(j);
}

bool is_flat(const Json& j)
{
    if (!j.is_object() && !j.is_array()) return true;
    if (is_graded_module(j)) return true;
    for (const auto& v : j) {
        if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); })) continue;
        if (v.is_structured()) return false;
    }
    return true;
}

/// An array of objects whose values are all flat renders as a table.
bool is_table(const Json& j)
{
    if (!j.is_array() || j.empty()) return false;
    for (const auto& row : j) {
        if (!row.is_object() || row.empty()) return false;
        for (const auto& [k, v] : row.items())
            if (!is_flat(v)) return false;
    }
    return true;
}

void table(std::ostringstream& os, const Json& rows, int indent)
{
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (const auto& [k, v] : row.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            line.push_back(row.contains(cols[c]) ? inline_str(row.at(cols[c])) : "");
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string s(indent, ' ');
        for (std::size_t c = 0; c < line.size(); ++c) {
            s += line[c];
            if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
}

void render(std::ostringstream& os, const Json& j, int indent)
{
    const std::string pad(indent, ' ');
    if (!j.is_object()) {
        if (is_table(j)) table(os, j, indent);
        else if (j.is_array() && !is_flat(j))
            for (const auto& v : j) {
                os << pad << "-\n";
                render(os, v, indent + 2);
            }
        else os << pad << inline_str(j) << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : j.items())
        if (is_flat(v)) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
        if (is_flat(v)) {
            os << pad << k << std::string(width - k.size() + 2, ' ') << inline_str(v) << '\n';
        } else {
            os << pad << k << ":\n";
            render(os, v, indent + 2);
        }
    }
}

}  // namespace

std::string render_text(const Json& report)
{
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

}  // namespace sgm::cli
