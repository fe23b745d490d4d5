#include "zsf/zsg_io.hpp"

#include <fstream>
#include <sstream>

namespace zsf {

void write_zsg(const EdgeLabeling& labeling, std::ostream& out) {
    const int n = labeling.n();
    out << "zsg 1\n" << n << "\n";
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = i + 1; j < n; ++j) out.put(labeling.label(i, j) > 0 ? '+' : '-');
        out.put('\n');
    }
}

std::string to_zsg(const EdgeLabeling& labeling) {
    std::ostringstream out;
    write_zsg(labeling, out);
    return out.str();
}

EdgeLabeling read_zsg(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "zsg 1")
        throw ParseError("zsg: bad header line");
    if (!std::getline(in, line)) throw ParseError("zsg: missing vertex count");
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(line, &pos);
        if (pos != line.size()) throw ParseError("zsg: bad vertex count '" + line + "'");
    } catch (const std::exception&) {
        throw ParseError("zsg: bad vertex count '" + line + "'");
    }
    if (n < 1) throw ParseError("zsg: vertex count must be >= 1");

    EdgeLabeling labeling(n);
    for (int i = 0; i + 1 < n; ++i) {
        if (!std::getline(in, line))
            throw ParseError("zsg: missing row " + std::to_string(i + 1));
        if (static_cast<int>(line.size()) != n - 1 - i)
            throw ParseError("zsg: row " + std::to_string(i + 1) + " has length " +
                             std::to_string(line.size()) + ", expected " +
                             std::to_string(n - 1 - i));
        for (int j = i + 1; j < n; ++j) {
            const char c = line[static_cast<std::size_t>(j - i - 1)];
            if (c != '+' && c != '-')
                throw ParseError("zsg: bad label character '" + std::string(1, c) + "'");
            if (c == '+') labeling.set_label(i, j, +1);
        }
    }
    return labeling;
}

EdgeLabeling parse_zsg(const std::string& text) {
    std::istringstream in(text);
    return read_zsg(in);
}

EdgeLabeling read_zsg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_zsg(in);
}

void write_zsg_file(const EdgeLabeling& labeling, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_zsg(labeling, out);
}

} // namespace zsf
