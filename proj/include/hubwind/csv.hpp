#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace hubwind::csv {

/// A parsed CSV with a mandatory header row. Cells are kept as text;
/// callers convert per column so errors can name the row and column.
class Table {
public:
    static Table read_file(const std::filesystem::path& path);

    std::size_t rows() const { return cells_.size(); }
    const std::vector<std::string>& header() const { return header_; }

    /// Column index, or throws naming the missing column.
    std::size_t column(const std::string& name) const;
    bool has_column(const std::string& name) const;

    const std::string& cell(std::size_t row, std::size_t col) const;
    double number(std::size_t row, std::size_t col) const;
    double number(std::size_t row, const std::string& col) const {
        return number(row, column(col));
    }
    const std::string& text(std::size_t row, const std::string& col) const {
        return cell(row, column(col));
    }

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::vector<std::string> header_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::string>> cells_;
};

/// Writes content to path atomically (temp file + rename).
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// Shortest-round-trip formatting for CSV numeric cells.
std::string format_number(double v);

/// FNV-1a over a file's bytes; used for stage input fingerprints.
std::uint64_t hash_file(const std::filesystem::path& path);
std::uint64_t hash_bytes(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace hubwind::csv
