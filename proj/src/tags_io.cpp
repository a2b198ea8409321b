#include "spsim/tags_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace spsim {

namespace {

// interleave channels by timestamp so files are time-ordered
std::vector<TimeTag> merged(const std::vector<std::vector<TimeTag>>& channels) {
    std::vector<TimeTag> all;
    size_t total = 0;
    for (const auto& c : channels) total += c.size();
    all.reserve(total);
    for (const auto& c : channels) all.insert(all.end(), c.begin(), c.end());
    std::stable_sort(all.begin(), all.end(), [](const TimeTag& a, const TimeTag& b) {
        return a.timestamp_ps < b.timestamp_ps;
    });
    return all;
}

void encode_le64(int64_t v, unsigned char* out) {
    uint64_t u = static_cast<uint64_t>(v);
    for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xFF);
}

int64_t decode_le64(const unsigned char* in) {
    uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<uint64_t>(in[i]) << (8 * i);
    return static_cast<int64_t>(u);
}

} // namespace

void write_tags(const std::vector<std::vector<TimeTag>>& channels, const std::string& path,
                TagFormat format) {
    auto all = merged(channels);
    if (format == TagFormat::binary9) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("write_tags: cannot open " + path);
        unsigned char rec[9];
        for (const auto& t : all) {
            rec[0] = t.channel;
            encode_le64(t.timestamp_ps, rec + 1);
            f.write(reinterpret_cast<const char*>(rec), 9);
        }
    } else {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("write_tags: cannot open " + path);
        f << "channel,timestamp_ps\n";
        char buf[64];
        for (const auto& t : all) {
            int n = std::snprintf(buf, sizeof buf, "%u,%lld\n", unsigned(t.channel),
                                  static_cast<long long>(t.timestamp_ps));
            f.write(buf, n);
        }
    }
}

IngestResult ingest_tags(const std::string& path, TagFormat format) {
    IngestResult out;
    auto push = [&](uint8_t ch, int64_t ts) {
        if (out.channels.size() <= ch) out.channels.resize(ch + 1);
        auto& v = out.channels[ch];
        if (!v.empty() && v.back().timestamp_ps > ts) out.sorted_warning = true;
        v.push_back({ts, ch});
        ++out.n_tags;
    };

    if (format == TagFormat::binary9) {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("ingest_tags: cannot open " + path);
        unsigned char rec[9];
        for (;;) {
            f.read(reinterpret_cast<char*>(rec), 9);
            std::streamsize got = f.gcount();
            if (got == 0) break;
            if (got < 9) {
                ++out.malformed_count; // trailing partial record
                break;
            }
            push(rec[0], decode_le64(rec + 1));
        }
    } else {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("ingest_tags: cannot open " + path);
        std::string line;
        if (!std::getline(f, line))
            return out; // empty file: empty streams, zero malformed
        if (line.rfind("channel", 0) != 0)
            throw std::runtime_error("ingest_tags: bad CSV header at byte offset 0 in " + path);
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            unsigned ch = 0;
            long long ts = 0;
            char trail = 0;
            int matched = std::sscanf(line.c_str(), "%u,%lld%c", &ch, &ts, &trail);
            if (matched < 2 || ch > 255 || (matched == 3 && trail != '\r')) {
                ++out.malformed_count;
                continue;
            }
            push(static_cast<uint8_t>(ch), ts);
        }
    }
    if (out.sorted_warning)
        for (auto& v : out.channels)
            std::sort(v.begin(), v.end(), [](const TimeTag& a, const TimeTag& b) {
                return a.timestamp_ps < b.timestamp_ps;
            });
    return out;
}

} // namespace spsim
