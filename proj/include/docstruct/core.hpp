#pragma once

// Shared domain types: normalized boxes, OCR pages, training samples, and
// the 0..999 position-token quantization used by the localization tasks.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace docstruct {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Axis-aligned rectangle in normalized image coordinates, origin top-left.
/// Valid boxes satisfy 0 <= x1 <= x2 <= 1 and 0 <= y1 <= y2 <= 1.
struct BBox {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  bool valid() const {
    return 0.0 <= x1 && x1 <= x2 && x2 <= 1.0 && 0.0 <= y1 && y1 <= y2 &&
           y2 <= 1.0;
  }
  bool operator==(const BBox&) const = default;
};

/// Smallest OCR unit: a single word and its box. Text is never empty and
/// never contains a line feed.
struct Word {
  std::string text;
  BBox box;
};

/// Word-level OCR annotation for one image, plus an optional caption.
struct OcrPage {
  std::string image_id;
  int width_px = 0;
  int height_px = 0;
  std::vector<Word> words;
  std::optional<std::string> caption;
};

enum class Granularity { Word, Phrase, Line, Block };

enum class Task {
  DocParse,
  TableParse,
  ChartParse,
  NaturalParse,
  TextGrounding,
  TextRecognition,
};

const char* to_string(Granularity g);
const char* to_string(Task t);
Granularity granularity_from_string(const std::string& s);
Task task_from_string(const std::string& s);
bool is_localization_task(Task t);

/// Instruction/answer pair produced by every builder. Localization samples
/// carry a granularity and gold boxes; parse samples carry neither.
struct TrainingSample {
  std::string image_id;
  Task task = Task::DocParse;
  std::string instruction;
  std::string answer;
  std::optional<Granularity> granularity;
  std::optional<std::vector<BBox>> boxes;
};

/// Validates the cross-field invariants of a sample; throws StructuralError.
void validate(const TrainingSample& s);

// ---------------------------------------------------------------------------
// Position tokens

/// Maps a normalized coordinate to a discrete token in [0, 999]:
/// clamp(floor(v * 1000), 0, 999). Throws DomainError outside [0, 1].
int quantize(double v);

/// Inverse of quantize up to one bin: returns the bin center (t + 0.5) / 1000.
/// Throws DomainError outside [0, 999].
double dequantize(int t);

/// Serializes a box as "<bbox>X1,Y1,X2,Y2</bbox>" with quantized coordinates.
std::string bbox_to_token_string(const BBox& b);

/// Extracts the first well-formed "<bbox>...</bbox>" span from an arbitrary
/// string and dequantizes it. A span is well-formed when it holds four
/// comma-separated integers in [0, 999] with x1 <= x2 and y1 <= y2.
/// Throws ParseError when no such span exists.
BBox parse_token_string(const std::string& s);

// ---------------------------------------------------------------------------
// Deterministic seeding helpers shared by the builders.

/// Stable per-page seed derived from the global seed and the image id, so
/// pages can be processed in any order or in parallel.
uint64_t page_seed(uint64_t global_seed, const std::string& image_id);

/// Fisher-Yates with a pinned generator; identical output on every platform.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, uint64_t seed) {
  // splitmix64 stream; std::shuffle is avoided because its draws are not
  // pinned across standard libraries.
  uint64_t state = seed;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(next() % i);
    std::swap(v[i - 1], v[j]);
  }
}

/// Seeded round-robin instruction selection: pool[seed % pool.size()].
/// Throws ConfigError on an empty pool.
const std::string& pick_instruction(const std::vector<std::string>& pool,
                                    uint64_t seed);

}  // namespace docstruct
