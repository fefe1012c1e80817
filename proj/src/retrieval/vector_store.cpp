#include "mike/retrieval/vector_store.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "mike/errors.hpp"

namespace mike::retrieval {

namespace {

constexpr char kMagic[8] = {'M', 'I', 'K', 'E', 'V', 'E', 'C', '1'};

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_f32(std::string& out, float f) {
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_u32(out, bits);
}

class Reader {
public:
    Reader(const std::string& data, const std::string& name) : data_(data), name_(name) {}
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(data_[pos_ + i]);
        pos_ += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(data_[pos_ + i]);
        pos_ += 8;
        return v;
    }
    float f32() {
        std::uint32_t bits = u32();
        float f;
        std::memcpy(&f, &bits, 4);
        return f;
    }
    std::string bytes(std::size_t n) {
        need(n);
        std::string s = data_.substr(pos_, n);
        pos_ += n;
        return s;
    }
    bool done() const { return pos_ == data_.size(); }

private:
    void need(std::size_t n) {
        if (pos_ + n > data_.size()) throw ParseError("vector store truncated: " + name_);
    }
    const std::string& data_;
    std::string name_;
    std::size_t pos_ = 0;
};

}  // namespace

void save_vector_store(const std::filesystem::path& file,
                       const std::map<std::string, EmbeddingVector>& vectors) {
    std::uint32_t dim = 0;
    for (const auto& [id, vec] : vectors) {
        if (dim == 0) dim = static_cast<std::uint32_t>(vec.dimension());
        if (vec.dimension() != dim)
            throw ValidationError("vector store: inconsistent dimensions for id '" + id + "'");
    }
    std::string out;
    out.append(kMagic, sizeof(kMagic));
    put_u32(out, dim);
    put_u64(out, vectors.size());
    for (const auto& [id, vec] : vectors) {
        put_u32(out, static_cast<std::uint32_t>(id.size()));
        out += id;
    }
    for (const auto& [id, vec] : vectors)
        for (float f : vec.values) put_f32(out, f);

    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write vector store: " + file.string());
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw Error("short write: " + file.string());
}

std::map<std::string, EmbeddingVector> load_vector_store(const std::filesystem::path& file) {
    std::ifstream f(file, std::ios::binary);
    if (!f) throw Error("cannot open vector store: " + file.string());
    std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());

    Reader r(data, file.string());
    if (r.bytes(8) != std::string(kMagic, sizeof(kMagic)))
        throw ParseError("vector store: bad magic in " + file.string());
    std::uint32_t dim = r.u32();
    std::uint64_t count = r.u64();
    std::vector<std::string> ids;
    ids.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) ids.push_back(r.bytes(r.u32()));
    std::map<std::string, EmbeddingVector> out;
    for (std::uint64_t i = 0; i < count; ++i) {
        EmbeddingVector v;
        v.values.reserve(dim);
        for (std::uint32_t d = 0; d < dim; ++d) v.values.push_back(r.f32());
        out.emplace(ids[i], std::move(v));
    }
    if (!r.done()) throw ParseError("vector store: trailing bytes in " + file.string());
    return out;
}

}  // namespace mike::retrieval
