#include "vidreq/frames/image.hpp"

#include <cctype>
#include <fstream>

#include "vidreq/core/error.hpp"

namespace vidreq::frames {

namespace {

struct Header {
    int width = 0;
    int height = 0;
    int maxval = 0;
};

// Reads the next header integer, skipping whitespace and '#' comments.
int read_header_int(std::istream& in, const std::filesystem::path& path) {
    int c = in.get();
    while (in) {
        if (c == '#') {
            while (in && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (!in || !std::isdigit(c)) throw Error(ErrorKind::MalformedManifest, path.string() + ": bad PGM header");
    long value = 0;
    while (in && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > (1 << 24)) throw Error(ErrorKind::MalformedManifest, path.string() + ": PGM dimension too large");
        c = in.get();
    }
    // The single whitespace byte after the maxval is consumed here too.
    return static_cast<int>(value);
}

Header read_header(std::istream& in, const std::filesystem::path& path) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5') {
        throw Error(ErrorKind::MalformedManifest, path.string() + ": not a binary PGM (P5)");
    }
    Header h;
    h.width = read_header_int(in, path);
    h.height = read_header_int(in, path);
    h.maxval = read_header_int(in, path);
    if (h.width <= 0 || h.height <= 0 || h.maxval <= 0 || h.maxval > 255) {
        throw Error(ErrorKind::MalformedManifest, path.string() + ": unsupported PGM geometry or maxval");
    }
    return h;
}

}  // namespace

GrayFrame read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MissingInput, path.string());
    Header h = read_header(in, path);
    GrayFrame frame(h.width, h.height);
    in.read(reinterpret_cast<char*>(frame.values.data()), static_cast<std::streamsize>(frame.values.size()));
    if (in.gcount() != static_cast<std::streamsize>(frame.values.size())) {
        throw Error(ErrorKind::MalformedManifest, path.string() + ": truncated PGM raster");
    }
    if (h.maxval != 255) {
        for (auto& v : frame.values) v = static_cast<std::uint8_t>((v * 255 + h.maxval / 2) / h.maxval);
    }
    return frame;
}

PgmSize read_pgm_size(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MissingInput, path.string());
    Header h = read_header(in, path);
    return {h.width, h.height};
}

void write_pgm(const std::filesystem::path& path, const GrayFrame& frame) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << "P5\n" << frame.width << " " << frame.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(frame.values.data()), static_cast<std::streamsize>(frame.values.size()));
}

}  // namespace vidreq::frames
