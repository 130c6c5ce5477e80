#include "wharf/io/dump.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace wharf {

static_assert(std::endian::native == std::endian::little,
              "dump format assumes a little-endian host");

void dump_matrix(const CMatrix& m, const std::string& path, const std::string& meta_json) {
    nlohmann::ordered_json hdr;
    hdr["rows"] = m.rows;
    hdr["cols"] = m.cols;
    hdr["format"] = "f64le-interleaved-rowmajor";
    hdr["meta"] = nlohmann::ordered_json::parse(meta_json);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write dump: " + path);
    out << hdr.dump() << "\n";
    out.write(reinterpret_cast<const char*>(m.data.data()),
              (std::streamsize)(m.data.size() * sizeof(cplx)));
}

CMatrix load_matrix_dump(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dump: " + path);
    std::string line;
    std::getline(in, line);
    auto hdr = nlohmann::ordered_json::parse(line);
    CMatrix m(hdr.at("rows").get<std::size_t>(), hdr.at("cols").get<std::size_t>());
    in.read(reinterpret_cast<char*>(m.data.data()), (std::streamsize)(m.data.size() * sizeof(cplx)));
    if (!in) throw std::runtime_error("dump truncated: " + path);
    return m;
}

}  // namespace wharf
