#include "kelpseg/npy.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "kelpseg/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "npy i/o assumes a little-endian host");

namespace kelpseg {

namespace {

constexpr char kMagic[] = "\x93NUMPY";

std::size_t dtype_size(const std::string& dtype) {
    if (dtype == "<u1" || dtype == "|u1") return 1;
    if (dtype == "<u2") return 2;
    if (dtype == "<f4") return 4;
    if (dtype == "<f8") return 8;
    throw ParseError("unsupported npy dtype '" + dtype + "'");
}

std::string shape_to_header(const std::vector<std::size_t>& shape) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        os << shape[i];
        if (shape.size() == 1 || i + 1 < shape.size()) os << ",";
        if (i + 1 < shape.size()) os << " ";
    }
    os << ")";
    return os.str();
}

std::vector<std::size_t> parse_shape(const std::string& header) {
    auto open = header.find('(');
    auto close = header.find(')', open);
    if (open == std::string::npos || close == std::string::npos)
        throw ParseError("npy header has no shape tuple");
    std::vector<std::size_t> shape;
    std::string inner = header.substr(open + 1, close - open - 1);
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        bool digits = false;
        std::size_t v = 0;
        for (char c : tok) {
            if (c >= '0' && c <= '9') {
                digits = true;
                v = v * 10 + static_cast<std::size_t>(c - '0');
            }
        }
        if (digits) shape.push_back(v);
    }
    return shape;
}

std::string parse_descr(const std::string& header) {
    auto key = header.find("'descr'");
    if (key == std::string::npos) throw ParseError("npy header has no descr");
    auto q1 = header.find('\'', key + 7);
    auto q2 = header.find('\'', q1 + 1);
    auto q3 = header.find('\'', q2 + 1);
    if (q2 == std::string::npos || q3 == std::string::npos)
        throw ParseError("malformed npy descr");
    return header.substr(q2 + 1, q3 - q2 - 1);
}

} // namespace

NpyArray npy_load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    char magic[6];
    in.read(magic, 6);
    if (!in || std::memcmp(magic, kMagic, 6) != 0)
        throw ParseError("not an npy file: " + path.string());

    unsigned char version[2];
    in.read(reinterpret_cast<char*>(version), 2);
    if (version[0] != 1) throw ParseError("unsupported npy version");

    unsigned char len_bytes[2];
    in.read(reinterpret_cast<char*>(len_bytes), 2);
    std::size_t header_len = len_bytes[0] | (std::size_t(len_bytes[1]) << 8);

    std::string header(header_len, '\0');
    in.read(header.data(), static_cast<std::streamsize>(header_len));
    if (!in) throw ParseError("truncated npy header in " + path.string());

    if (header.find("'fortran_order': True") != std::string::npos)
        throw ParseError("fortran-order npy not supported");

    NpyArray arr;
    arr.dtype = parse_descr(header);
    arr.shape = parse_shape(header);

    std::size_t nbytes = arr.element_count() * dtype_size(arr.dtype);
    arr.bytes.resize(nbytes);
    in.read(reinterpret_cast<char*>(arr.bytes.data()),
            static_cast<std::streamsize>(nbytes));
    if (!in) throw ParseError("truncated npy payload in " + path.string());
    return arr;
}

void npy_save(const std::filesystem::path& path, const NpyArray& array) {
    dtype_size(array.dtype); // validates

    std::ostringstream dict;
    dict << "{'descr': '" << array.dtype
         << "', 'fortran_order': False, 'shape': "
         << shape_to_header(array.shape) << ", }";
    std::string header = dict.str();
    // Total of magic(6)+version(2)+len(2)+header must be a multiple of 64.
    std::size_t unpadded = 10 + header.size() + 1;
    std::size_t padded = (unpadded + 63) / 64 * 64;
    header.append(padded - unpadded, ' ');
    header.push_back('\n');

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(kMagic, 6);
    const unsigned char version[2] = {1, 0};
    out.write(reinterpret_cast<const char*>(version), 2);
    const unsigned char len_bytes[2] = {
        static_cast<unsigned char>(header.size() & 0xff),
        static_cast<unsigned char>((header.size() >> 8) & 0xff)};
    out.write(reinterpret_cast<const char*>(len_bytes), 2);
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    out.write(reinterpret_cast<const char*>(array.bytes.data()),
              static_cast<std::streamsize>(array.bytes.size()));
    if (!out) throw IoError("short write to " + path.string());
}

void npy_save_u8(const std::filesystem::path& path, const MaskGrid& grid) {
    NpyArray arr;
    arr.dtype = "<u1";
    arr.shape = {grid.rows(), grid.cols()};
    arr.bytes.assign(grid.raw().begin(), grid.raw().end());
    npy_save(path, arr);
}

void npy_save_u16_stack(const std::filesystem::path& path,
                        const std::vector<BandGrid>& bands) {
    if (bands.empty()) throw InvalidSize("empty band stack");
    NpyArray arr;
    arr.dtype = "<u2";
    arr.shape = {bands.size(), bands[0].rows(), bands[0].cols()};
    arr.bytes.resize(arr.element_count() * 2);
    std::size_t offset = 0;
    for (const auto& band : bands) {
        if (!band.same_shape(bands[0]))
            throw ShapeMismatch("band shapes differ in stack");
        std::memcpy(arr.bytes.data() + offset, band.raw().data(),
                    band.size() * 2);
        offset += band.size() * 2;
    }
    npy_save(path, arr);
}

void npy_save_f32(const std::filesystem::path& path, const FloatGrid& grid) {
    NpyArray arr;
    arr.dtype = "<f4";
    arr.shape = {grid.rows(), grid.cols()};
    arr.bytes.resize(grid.size() * 4);
    auto* dst = reinterpret_cast<float*>(arr.bytes.data());
    for (std::size_t i = 0; i < grid.size(); ++i)
        dst[i] = static_cast<float>(grid.raw()[i]);
    npy_save(path, arr);
}

MaskGrid npy_load_u8(const std::filesystem::path& path) {
    NpyArray arr = npy_load(path);
    if ((arr.dtype != "<u1" && arr.dtype != "|u1") || arr.shape.size() != 2)
        throw ParseError("expected 2-d uint8 npy: " + path.string());
    MaskGrid grid(arr.shape[0], arr.shape[1]);
    std::memcpy(grid.raw().data(), arr.bytes.data(), arr.bytes.size());
    return grid;
}

std::vector<BandGrid> npy_load_u16_stack(const std::filesystem::path& path) {
    NpyArray arr = npy_load(path);
    if (arr.dtype != "<u2" || arr.shape.size() != 3)
        throw ParseError("expected 3-d uint16 npy: " + path.string());
    std::vector<BandGrid> bands;
    bands.reserve(arr.shape[0]);
    std::size_t plane = arr.shape[1] * arr.shape[2];
    for (std::size_t b = 0; b < arr.shape[0]; ++b) {
        BandGrid grid(arr.shape[1], arr.shape[2]);
        std::memcpy(grid.raw().data(), arr.bytes.data() + b * plane * 2,
                    plane * 2);
        bands.push_back(std::move(grid));
    }
    return bands;
}

FloatGrid npy_load_f32(const std::filesystem::path& path) {
    NpyArray arr = npy_load(path);
    if (arr.dtype != "<f4" || arr.shape.size() != 2)
        throw ParseError("expected 2-d float32 npy: " + path.string());
    FloatGrid grid(arr.shape[0], arr.shape[1]);
    const auto* src = reinterpret_cast<const float*>(arr.bytes.data());
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid.raw()[i] = static_cast<double>(src[i]);
    return grid;
}

} // namespace kelpseg
