#pragma once

#include <optional>
#include <string>

#include "regrank/ratings.hpp"

namespace regrank {

enum class DatasetFormat : std::uint8_t {
    movielens_100k, // user \t item \t rating \t timestamp
    movielens_1m,   // user::item::rating::timestamp
    filmtrust,      // user item rating (whitespace)
    generic_tsv,    // user <delim> item <delim> rating
};

const char* dataset_format_name(DatasetFormat f);
std::optional<DatasetFormat> dataset_format_of_name(std::string_view name);
RatingScale default_scale(DatasetFormat f);

struct DatasetDescriptor {
    DatasetFormat format = DatasetFormat::movielens_100k;
    std::string path;
    RatingScale scale; // must cover every observed value
    char delimiter = '\t'; // generic_tsv only
};

inline DatasetDescriptor describe_dataset(DatasetFormat f, std::string path) {
    return DatasetDescriptor{f, std::move(path), default_scale(f)};
}

// Parses and normalizes the file. Malformed lines, duplicate (user, item)
// pairs and out-of-scale values raise DataError with the offending line
// number. The result is canonically sorted regardless of input order.
RatingTable ingest(const DatasetDescriptor& d);

// Writes a normalized table as "user \t item \t value" lines.
void write_ratings_tsv(const RatingTable& table, const std::string& path);

} // namespace regrank
