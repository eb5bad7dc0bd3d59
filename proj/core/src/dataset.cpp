#include "regrank/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "regrank/errors.hpp"
#include "regrank/ids.hpp"

namespace regrank {

bool label_less(const std::string& a, const std::string& b) {
    auto as_number = [](const std::string& s, unsigned long long& out) {
        if (s.empty() || s.size() > 18) return false;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && p == s.data() + s.size();
    };
    unsigned long long na = 0, nb = 0;
    if (as_number(a, na) && as_number(b, nb)) {
        if (na != nb) return na < nb;
        return a < b; // "07" vs "7"
    }
    return a < b;
}

RatingTable normalize_ratings(std::vector<Rating> rows, const RatingScale& scale) {
    std::sort(rows.begin(), rows.end(), rating_key_less);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!scale.contains(rows[i].value))
            throw DataError("rating value " + std::to_string(rows[i].value) +
                            " outside the declared scale for user " + rows[i].user + ", item " +
                            rows[i].item);
        if (i > 0 && rows[i].user == rows[i - 1].user && rows[i].item == rows[i - 1].item)
            throw DataError("duplicate rating for user " + rows[i].user + ", item " +
                            rows[i].item);
    }
    return RatingTable{std::move(rows), scale};
}

const char* dataset_format_name(DatasetFormat f) {
    switch (f) {
    case DatasetFormat::movielens_100k: return "movielens-100k";
    case DatasetFormat::movielens_1m: return "movielens-1m";
    case DatasetFormat::filmtrust: return "filmtrust";
    case DatasetFormat::generic_tsv: return "generic-tsv";
    }
    return "?";
}

std::optional<DatasetFormat> dataset_format_of_name(std::string_view name) {
    if (name == "movielens-100k" || name == "ml-100k") return DatasetFormat::movielens_100k;
    if (name == "movielens-1m" || name == "ml-1m") return DatasetFormat::movielens_1m;
    if (name == "filmtrust") return DatasetFormat::filmtrust;
    if (name == "generic-tsv" || name == "tsv") return DatasetFormat::generic_tsv;
    return std::nullopt;
}

RatingScale default_scale(DatasetFormat f) {
    switch (f) {
    case DatasetFormat::movielens_100k:
    case DatasetFormat::movielens_1m:
    case DatasetFormat::generic_tsv: return RatingScale{1.0, 5.0, 1.0};
    case DatasetFormat::filmtrust: return RatingScale{0.5, 4.0, 0.5};
    }
    return RatingScale{};
}

namespace {

std::vector<std::string> split_by(const std::string& line, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = line.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

std::vector<std::string> split_whitespace(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double parse_value(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw DataError("malformed rating value '" + tok + "'", line_no);
    }
}

} // namespace

RatingTable ingest(const DatasetDescriptor& d) {
    std::ifstream in(d.path);
    if (!in) throw DataError("cannot open dataset file: " + d.path);

    std::vector<Rating> rows;
    // line number of the first occurrence of each (user, item) pair
    std::unordered_map<std::string, std::size_t> first_seen;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> f;
        std::size_t min_fields = 3;
        switch (d.format) {
        case DatasetFormat::movielens_100k:
            f = split_by(line, "\t");
            min_fields = 4;
            break;
        case DatasetFormat::movielens_1m:
            f = split_by(line, "::");
            min_fields = 4;
            break;
        case DatasetFormat::filmtrust: f = split_whitespace(line); break;
        case DatasetFormat::generic_tsv: f = split_by(line, std::string(1, d.delimiter)); break;
        }
        if (f.size() < min_fields || f[0].empty() || f[1].empty() || f[2].empty())
            throw DataError("malformed line '" + line + "'", line_no);

        Rating r{f[0], f[1], parse_value(f[2], line_no)};
        if (!d.scale.contains(r.value))
            throw DataError("rating " + f[2] + " outside declared scale", line_no);

        std::string key = r.user + '\t' + r.item;
        auto [it, inserted] = first_seen.emplace(std::move(key), line_no);
        if (!inserted)
            throw DataError("duplicate rating for user " + r.user + ", item " + r.item +
                                " (first at line " + std::to_string(it->second) + ")",
                            line_no);
        rows.push_back(std::move(r));
    }
    return normalize_ratings(std::move(rows), d.scale);
}

void write_ratings_tsv(const RatingTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open output file: " + path);
    for (const auto& r : table.rows) {
        out << r.user << '\t' << r.item << '\t' << r.value << '\n';
    }
    if (!out) throw DataError("failed writing " + path);
}

} // namespace regrank
