#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spsim/detector.hpp"

namespace spsim {

enum class TagFormat { binary9, csv };

struct IngestResult {
    std::vector<std::vector<TimeTag>> channels; // sorted by timestamp, indexed by channel id
    int64_t n_tags = 0;
    int64_t malformed_count = 0;
    bool sorted_warning = false; // input was not time-ordered
};

// Binary records: 9 bytes little-endian, u8 channel + i64 picoseconds.
// CSV: header "channel,timestamp_ps".
void write_tags(const std::vector<std::vector<TimeTag>>& channels, const std::string& path,
                TagFormat format);

IngestResult ingest_tags(const std::string& path, TagFormat format);

} // namespace spsim
