#include "hubwind/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hubwind::csv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(std::move(cur));
    return out;
}

}  // namespace

Table Table::read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    Table t;
    t.path_ = path;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
    t.header_ = split_line(line);
    for (std::size_t i = 0; i < t.header_.size(); ++i) t.index_[t.header_[i]] = i;

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != t.header_.size())
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": expected " + std::to_string(t.header_.size()) +
                                     " columns, got " + std::to_string(cells.size()));
        t.cells_.push_back(std::move(cells));
    }
    return t;
}

std::size_t Table::column(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end())
        throw std::runtime_error(path_.string() + ": missing column '" + name + "'");
    return it->second;
}

bool Table::has_column(const std::string& name) const { return index_.count(name) > 0; }

const std::string& Table::cell(std::size_t row, std::size_t col) const {
    return cells_.at(row).at(col);
}

double Table::number(std::size_t row, std::size_t col) const {
    const std::string& s = cell(row, col);
    if (s.empty() || s == "nan" || s == "NaN") return std::nan("");
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error(path_.string() + ": row " + std::to_string(row + 2) +
                                 ", column '" + header_.at(col) + "': bad number '" + s + "'");
    return v;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    // %.17g round-trips; trim to the shortest representation that does.
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        double back = 0.0;
        std::from_chars(buf, buf + std::strlen(buf), back);
        if (back == v) break;
    }
    return buf;
}

std::uint64_t hash_bytes(const std::string& bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t hash_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot hash missing file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return hash_bytes(ss.str());
}

}  // namespace hubwind::csv
