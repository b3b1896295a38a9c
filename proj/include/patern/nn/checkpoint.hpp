#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "patern/errors.hpp"
#include "patern/nn/network.hpp"

namespace patern::nn {

// CRC-32 (IEEE 802.3, reflected, poly 0xEDB88320).
inline std::uint32_t crc32(const std::uint8_t* data, std::size_t len, std::uint32_t seed = 0) {
    static const std::array<std::uint32_t, 256> table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t crc = ~seed;
    for (std::size_t i = 0; i < len; ++i) crc = table[(crc ^ data[i]) & 0xFFu] ^ (crc >> 8);
    return ~crc;
}

// ---------------------------------------------------------------------------
// Little-endian byte stream helpers
// ---------------------------------------------------------------------------

class ByteWriter {
public:
    std::vector<std::uint8_t> bytes;

    void u8(std::uint8_t v) { bytes.push_back(v); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
    void f32(float v) {
        std::uint32_t bits;
        std::memcpy(&bits, &v, 4);
        u32(bits);
    }
    void f64(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, 8);
        u64(bits);
    }
    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        bytes.insert(bytes.end(), s.begin(), s.end());
    }
};

class ByteReader {
public:
    ByteReader(const std::uint8_t* data, std::size_t len) : data_(data), len_(len) {}

    std::size_t offset() const { return pos_; }
    std::size_t remaining() const { return len_ - pos_; }

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    float f32() {
        std::uint32_t bits = u32();
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }
    double f64() {
        std::uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }
    std::string str() {
        const std::uint32_t n = u32();
        need(n);
        std::string s(reinterpret_cast<const char*>(data_ + pos_), n);
        pos_ += n;
        return s;
    }

private:
    const std::uint8_t* data_;
    std::size_t len_;
    std::size_t pos_ = 0;

    void need(std::size_t n) const {
        if (pos_ + n > len_) throw IoError("checkpoint: truncated stream");
    }
};

// ---------------------------------------------------------------------------
// Network block: name, input shape, layer table, raw f32 parameters
// ---------------------------------------------------------------------------

inline void write_network(ByteWriter& w, const std::string& name, const Network<float>& net) {
    w.str(name);
    w.u32(static_cast<std::uint32_t>(net.input_shape().size()));
    for (std::size_t d : net.input_shape()) w.u64(d);
    w.u32(static_cast<std::uint32_t>(net.layers().size()));
    for (const auto& layer : net.layers()) {
        w.u8(static_cast<std::uint8_t>(layer.spec.kind));
        w.u32(layer.spec.in);
        w.u32(layer.spec.out);
        w.u32(layer.spec.kernel);
        w.u32(layer.spec.stride);
        w.u32(layer.spec.pad);
    }
    w.u64(net.parameter_count());
    for (const Tensor<float>* p : net.parameters())
        for (float v : p->data) w.f32(v);
}

inline std::pair<std::string, Network<float>> read_network(ByteReader& r) {
    const std::string name = r.str();
    std::vector<std::size_t> input_shape(r.u32());
    for (auto& d : input_shape) d = static_cast<std::size_t>(r.u64());
    std::vector<LayerSpec> specs(r.u32());
    for (auto& s : specs) {
        s.kind = static_cast<LayerKind>(r.u8());
        s.in = r.u32();
        s.out = r.u32();
        s.kernel = r.u32();
        s.stride = r.u32();
        s.pad = r.u32();
    }
    Network<float> net(input_shape, specs);
    const std::uint64_t count = r.u64();
    if (count != net.parameter_count()) throw IoError("checkpoint: parameter count mismatch");
    for (Tensor<float>* p : net.parameters())
        for (float& v : p->data) v = r.f32();
    return {name, std::move(net)};
}

// ---------------------------------------------------------------------------
// Framed file: magic "PTRN", u8 version, payload, trailing CRC32 of payload
// ---------------------------------------------------------------------------

inline constexpr char kCheckpointMagic[4] = {'P', 'T', 'R', 'N'};
inline constexpr std::uint8_t kCheckpointVersion = 1;

inline std::vector<std::uint8_t> frame_checkpoint(const std::vector<std::uint8_t>& payload) {
    std::vector<std::uint8_t> out;
    out.reserve(payload.size() + 9);
    out.insert(out.end(), kCheckpointMagic, kCheckpointMagic + 4);
    out.push_back(kCheckpointVersion);
    out.insert(out.end(), payload.begin(), payload.end());
    const std::uint32_t crc = crc32(payload.data(), payload.size());
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(crc >> (8 * i)));
    return out;
}

// Returns the verified payload.
inline std::vector<std::uint8_t> unframe_checkpoint(const std::vector<std::uint8_t>& file) {
    if (file.size() < 9) throw IoError("checkpoint: file too short");
    if (std::memcmp(file.data(), kCheckpointMagic, 4) != 0)
        throw IoError("checkpoint: bad magic");
    if (file[4] != kCheckpointVersion)
        throw IoError("checkpoint: unsupported version " + std::to_string(file[4]));
    const std::size_t payload_len = file.size() - 9;
    std::uint32_t stored = 0;
    for (int i = 0; i < 4; ++i)
        stored |= static_cast<std::uint32_t>(file[5 + payload_len + i]) << (8 * i);
    const std::uint32_t actual = crc32(file.data() + 5, payload_len);
    if (stored != actual) throw IoError("checkpoint: CRC mismatch");
    return {file.begin() + 5, file.begin() + 5 + static_cast<std::ptrdiff_t>(payload_len)};
}

inline void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open for write: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw IoError("write failed: " + path);
}

inline std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for read: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

}  // namespace patern::nn
