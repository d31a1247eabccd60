#include "mbb/datasets.hpp"

#include <curl/curl.h>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mbb/edge_list.hpp"
#include "mbb/errors.hpp"

namespace fs = std::filesystem;

namespace mbb {

namespace {

DatasetInfo konect(std::string name, std::string id, std::size_t opt) {
  DatasetInfo d;
  d.name = std::move(name);
  d.konect_id = std::move(id);
  d.url = "http://konect.cc/files/download.tsv." + d.konect_id + ".tar.bz2";
  d.reported_optimum = opt;
  return d;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  const auto i = s.find_first_not_of(" \t\r\n");
  return i == std::string::npos ? std::string{} : s.substr(i);
}

std::size_t write_cb(char* data, std::size_t size, std::size_t n, void* user) {
  auto* out = static_cast<std::ofstream*>(user);
  out->write(data, static_cast<std::streamsize>(size * n));
  return out->good() ? size * n : 0;
}

void download(const std::string& url, const fs::path& to) {
  std::ofstream out(to, std::ios::binary);
  if (!out) throw NetworkError("cannot write " + to.string());
  CURL* curl = curl_easy_init();
  if (!curl) throw NetworkError("curl init failed");
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl, CURLOPT_CONNECTTIMEOUT, 20L);
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, write_cb);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &out);
  const auto rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  out.close();
  if (rc != CURLE_OK) {
    fs::remove(to);
    throw NetworkError("download of " + url + " failed: " + curl_easy_strerror(rc));
  }
}

// .tar.bz2 extraction goes through the system tar; there is no bzip2
// library to link against here.
void extract(const fs::path& archive, const fs::path& dir) {
  const std::string cmd = "tar xjf '" + archive.string() + "' -C '" + dir.string() + "' 2>/dev/null";
  if (std::system(cmd.c_str()) != 0) throw NetworkError("could not extract " + archive.string());
}

[[noreturn]] void quarantine(const fs::path& cache_dir, const DatasetInfo& d, const std::string& why) {
  const auto stamp = std::chrono::system_clock::now().time_since_epoch().count();
  const auto dest = cache_dir / "quarantine" / (d.name + "-" + std::to_string(stamp));
  fs::create_directories(dest.parent_path());
  fs::rename(cache_dir / d.name, dest);
  throw ChecksumMismatch(d.name + ": " + why + " (moved to " + dest.string() + ")");
}

}  // namespace

const std::vector<DatasetInfo>& dataset_registry() {
  static const std::vector<DatasetInfo> reg = {
      konect("unicodelang", "unicodelang", 4),
      konect("moreno-crime", "moreno_crime", 2),
      konect("opsahl-ucforum", "opsahl-ucforum", 5),
      konect("escorts", "escorts", 6),
      konect("dbpedia-writer", "dbpedia-writer", 6),
  };
  return reg;
}

const DatasetInfo& find_dataset(const std::string& name) {
  for (const auto& d : dataset_registry()) {
    if (d.name == name || d.konect_id == name) return d;
  }
  throw UnknownDataset("unknown dataset '" + name + "'");
}

fs::path default_cache_dir() {
  if (const char* c = std::getenv("MBB_CACHE_DIR"); c && *c) return c;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "mbb";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "mbb";
  return fs::temp_directory_path() / "mbb-cache";
}

bool offline_from_env() {
  const char* v = std::getenv("MBB_OFFLINE");
  return v && *v && std::string(v) != "0";
}

std::string sha256_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

fs::path fetch_dataset(const std::string& name, const fs::path& cache_dir, bool offline) {
  const auto& d = find_dataset(name);
  const auto dir = cache_dir / d.name;
  const auto file = dir / ("out." + d.konect_id);
  const auto sidecar = dir / ("out." + d.konect_id + ".sha256");

  if (!fs::exists(file)) {
    if (offline) throw NotCached(d.name + " is not cached in " + cache_dir.string());
    fs::create_directories(dir);
    const auto archive = dir / (d.konect_id + ".tar.bz2");
    download(d.url, archive);
    const auto tmp = dir / "extract.tmp";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    extract(archive, tmp);
    fs::path found;
    for (const auto& e : fs::recursive_directory_iterator(tmp)) {
      if (e.is_regular_file() && e.path().filename() == file.filename()) found = e.path();
    }
    if (found.empty()) {
      fs::remove_all(tmp);
      throw NetworkError("archive for " + d.name + " has no " + file.filename().string());
    }
    fs::rename(found, file);
    fs::remove_all(tmp);
    fs::remove(archive);
  }

  const auto actual = sha256_file(file);
  if (!d.sha256.empty() && actual != d.sha256) quarantine(cache_dir, d, "checksum differs from the pinned value");
  if (fs::exists(sidecar)) {
    if (trim(read_all(sidecar)) != actual) quarantine(cache_dir, d, "checksum differs from the recorded value");
  } else {
    std::ofstream(sidecar) << actual << '\n';
  }
  return file;
}

BipartiteGraph load_dataset(const std::string& name, const fs::path& cache_dir, bool offline) {
  const auto& d = find_dataset(name);
  const auto path = fetch_dataset(name, cache_dir, offline);
  const auto text = read_all(path);
  if (d.left_column == 0 && d.right_column == 1) return parse_edge_list(text, EdgeListDialect::Konect);
  // remap columns first
  std::ostringstream remapped;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ls(line);
    std::vector<std::string> cols;
    for (std::string t; ls >> t;) cols.push_back(t);
    const auto need = static_cast<std::size_t>(std::max(d.left_column, d.right_column));
    if (cols.size() <= need) continue;
    remapped << cols[static_cast<std::size_t>(d.left_column)] << ' ' << cols[static_cast<std::size_t>(d.right_column)]
             << '\n';
  }
  return parse_edge_list(remapped.str(), EdgeListDialect::Konect);
}

}  // namespace mbb
