#include "binpack/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace binpack {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Instance read_bpx(std::istream& in, const std::string& origin) {
    std::vector<std::string> lines;
    std::map<std::string, std::string> meta;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = strip(line.substr(1));
            size_t colon = body.find(':');
            if (colon != std::string::npos) {
                std::string key = strip(body.substr(0, colon));
                std::string value = strip(body.substr(colon + 1));
                if (!key.empty() && key.find(' ') == std::string::npos) meta[key] = value;
            }
            continue;
        }
        lines.push_back(line);
    }
    if (lines.empty()) fail(ErrorCode::parse, origin + ": no instance data");

    std::vector<std::pair<Rat, long long>> pairs;
    if (lines[0].rfind("bpx", 0) == 0) {
        std::istringstream header(lines[0]);
        std::string tag;
        long long version = 0, unit = 0;
        header >> tag >> version >> unit;
        if (header.fail() || version != 1)
            fail(ErrorCode::parse, origin + ": bad header '" + lines[0] + "'");
        if (unit < 2 || unit > 1000000)
            fail(ErrorCode::parse, origin + ": grid denominator out of range: " + std::to_string(unit));
        for (size_t i = 1; i < lines.size(); ++i) {
            std::istringstream row(lines[i]);
            std::string size_text;
            long long count = 0;
            row >> size_text >> count;
            if (row.fail()) fail(ErrorCode::parse, origin + ": bad type line '" + lines[i] + "'");
            Rat size = parse_decimal(size_text);
            if (unit % size.denominator() != 0)
                fail(ErrorCode::parse, origin + ": size off the 1/" + std::to_string(unit) +
                                           " grid: " + size_text);
            pairs.emplace_back(size, count);
        }
        Instance inst = build_instance(pairs, SizeGrid{unit});
        inst.meta = std::move(meta);
        return inst;
    }

    // flat list: one size per line, grid inferred from the denominators
    long long unit = 1;
    for (const auto& line : lines) {
        Rat size = parse_decimal(line);
        unit = lcm_ll(unit, size.denominator());
        if (unit > 1000000) fail(ErrorCode::parse, origin + ": sizes need a grid finer than 1e6");
        pairs.emplace_back(size, 1);
    }
    if (unit < 2) unit = 2;
    Instance inst = build_instance(pairs, SizeGrid{unit});
    inst.meta = std::move(meta);
    return inst;
}

Instance read_bpx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io, "cannot open " + path);
    return read_bpx(in, path);
}

void write_bpx(const Instance& inst, std::ostream& out) {
    for (const auto& t : inst.types) {
        Rat size(t.size_num, inst.grid.unit);
        if (format_exact(size).find('/') != std::string::npos)
            fail(ErrorCode::io, "size " + format_exact(size) + " has no exact decimal form");
    }
    out << "bpx 1 " << inst.grid.unit << "\n";
    for (const auto& [key, value] : inst.meta) out << "# " << key << ": " << value << "\n";
    for (const auto& t : inst.types)
        out << format_exact(Rat(t.size_num, inst.grid.unit)) << " " << t.count << "\n";
}

void write_bpx_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot write " + path);
    write_bpx(inst, out);
    if (!out) fail(ErrorCode::io, "write failed: " + path);
}

}  // namespace binpack
