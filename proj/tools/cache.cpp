#include "cache.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace tautilt::cli {

namespace fs = std::filesystem;

Cache::Cache(fs::path dir, bool enabled, std::ostream& warnings)
    : dir_(std::move(dir)), enabled_(enabled), warnings_(warnings) {}

fs::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::string Cache::get_or_compute(const std::string& key, const std::function<std::string()>& compute,
                                  const std::function<bool(const std::string&)>& valid) {
    hit_ = false;
    if (!enabled_) return compute();
    const fs::path file = path_for(key);
    if (fs::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string payload = ss.str();
        if (valid(payload)) {
            hit_ = true;
            return payload;
        }
        warnings_ << "tautilt: warning: corrupt cache entry " << file.string() << ", recomputing\n";
    }
    std::string payload = compute();
    try {
        fs::create_directories(dir_);
        write_atomically(file, payload);
    } catch (const std::exception& e) {
        warnings_ << "tautilt: warning: cannot write cache entry " << file.string() << ": " << e.what() << "\n";
    }
    return payload;
}

void write_atomically(const fs::path& target, const std::string& content) {
    std::random_device rd;
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error(ec.message());
    }
}

}  // namespace tautilt::cli
