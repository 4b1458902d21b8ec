// Copyright 2026 The onomast Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "onomast/corpus/tei.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <sstream>

#include "onomast/error.hpp"

namespace onomast::corpus {

namespace pt = boost::property_tree;

namespace {

void append_escaped(std::string& out, std::string_view text, bool attribute) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
          break;
        }
        [[fallthrough]];
      default: out.push_back(c);
    }
  }
}

std::string attr(const pt::ptree& node, const std::string& name) {
  if (auto attrs = node.get_child_optional("<xmlattr>"))
    if (auto v = attrs->get_optional<std::string>(name)) return *v;
  return {};
}

bool is_blank(std::string_view s) { return s.find_first_not_of(" \t\r\n") == std::string_view::npos; }

void flatten(const pt::ptree& node, std::string& out) {
  for (const auto& [key, child] : node) {
    if (key == "<xmlattr>") continue;
    if (key == "<xmltext>") {
      out += child.data();
    } else {
      flatten(child, out);
    }
  }
}

class TeiReader {
 public:
  TeiReadResult read(const pt::ptree& tree) {
    const pt::ptree* tei = nullptr;
    for (const auto& [key, child] : tree)
      if (key == "TEI") tei = &child;
    if (!tei) throw ParseError("missing <TEI> root element", 1);
    const std::string lang = attr(*tei, "xml:lang");
    const std::string script = attr(*tei, "script");
    auto body = tei->get_child_optional("text.body");
    if (!body) throw ParseError("missing <text><body>", 1);
    int divisions = 0;
    for (const auto& [key, node] : *body) {
      if (key == "d") {
        read_division(node, ++divisions);
      } else {
        absorb(key, node, "body");
      }
    }
    return {build(lang, script.empty() ? text::Script::latin : text::parse_script(script), divisions),
            std::move(warnings_)};
  }

 private:
  // Flat record of one segment; documents are assembled once every record
  // and its trailing whitespace are known.
  struct Record {
    bool head;
    SegmentId id;  // s == 0 for heads
    std::string text;
    std::string space_after;
  };

  static void expect_id(const pt::ptree& node, const std::string& expected) {
    const std::string id = attr(node, "xml:id");
    if (id != expected)
      throw IdError("expected xml:id=\"" + expected + "\", found \"" + id + "\"");
  }

  // Whitespace between elements belongs to the most recently closed segment.
  void absorb(const std::string& key, const pt::ptree& node, const char* where) {
    if (key == "<xmlattr>") return;
    if (key == "<xmltext>") {
      const std::string& data = node.data();
      if (!is_blank(data)) {
        warnings_.push_back(std::string("ignored text inside <") + where + ">");
      } else if (!records_.empty()) {
        records_.back().space_after += data;
      }
      return;
    }
    warnings_.push_back("ignored <" + key + "> inside <" + where + ">");
  }

  void read_division(const pt::ptree& node, int d) {
    expect_id(node, "d" + std::to_string(d));
    int paragraphs = 0;
    for (const auto& [key, child] : node) {
      if (key == "head") {
        if (paragraphs > 0 || (!records_.empty() && records_.back().head && records_.back().id.d == d))
          throw IdError("misplaced <head> in d" + std::to_string(d));
        std::string text;
        flatten(child, text);
        records_.push_back({true, {d, 0, 0}, std::move(text), {}});
      } else if (key == "p") {
        read_paragraph(child, d, ++paragraphs);
      } else {
        absorb(key, child, "d");
      }
    }
    paragraph_counts_.push_back(paragraphs);
  }

  void read_paragraph(const pt::ptree& node, int d, int p) {
    expect_id(node, "d" + std::to_string(d) + "p" + std::to_string(p));
    int sentences = 0;
    for (const auto& [key, child] : node) {
      if (key != "s") {
        absorb(key, child, "p");
        continue;
      }
      const SegmentId id{d, p, ++sentences};
      expect_id(child, id.str());
      std::string text;
      for (const auto& [inner_key, inner] : child) {
        if (inner_key == "<xmlattr>") continue;
        if (inner_key == "<xmltext>") {
          text += inner.data();
        } else {
          warnings_.push_back("flattened <" + inner_key + "> in " + id.str());
          flatten(inner, text);
        }
      }
      records_.push_back({false, id, std::move(text), {}});
    }
  }

  Document build(const std::string& lang, text::Script script, int division_count) {
    std::vector<Division> divisions(static_cast<std::size_t>(division_count));
    for (std::size_t d = 0; d < divisions.size(); ++d)
      divisions[d].paragraphs.resize(static_cast<std::size_t>(paragraph_counts_[d]));
    for (Record& r : records_) {
      Division& div = divisions[static_cast<std::size_t>(r.id.d - 1)];
      if (r.head) {
        div.head = std::move(r.text);
        div.head_space_after = std::move(r.space_after);
      } else {
        div.paragraphs[static_cast<std::size_t>(r.id.p - 1)].sentences.emplace_back(r.id, std::move(r.text),
                                                                                      std::move(r.space_after));
      }
    }
    return Document(lang, script, std::move(divisions));
  }

  std::vector<Record> records_;
  std::vector<int> paragraph_counts_;
  std::vector<std::string> warnings_;
};

}  // namespace

std::string serialize_tei(const Document& doc) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<TEI xml:lang=\"";
  append_escaped(out, doc.lang(), true);
  out += "\" script=\"";
  out += text::script_name(doc.script());
  out += "\"><text><body>";
  const auto& divisions = doc.divisions();
  for (std::size_t di = 0; di < divisions.size(); ++di) {
    const Division& div = divisions[di];
    const std::string d_id = "d" + std::to_string(di + 1);
    out += "<d xml:id=\"" + d_id + "\">";
    // Whitespace owned by the last segment of an element goes after the
    // outermost closing tag it ends.
    std::string carry;
    if (div.head) {
      out += "<head>";
      append_escaped(out, *div.head, false);
      out += "</head>";
      if (div.paragraphs.empty()) {
        carry = div.head_space_after;
      } else {
        append_escaped(out, div.head_space_after, false);
      }
    }
    for (std::size_t pi = 0; pi < div.paragraphs.size(); ++pi) {
      const Paragraph& para = div.paragraphs[pi];
      const std::string p_id = d_id + "p" + std::to_string(pi + 1);
      out += "<p xml:id=\"" + p_id + "\">";
      for (std::size_t si = 0; si < para.sentences.size(); ++si) {
        const Sentence& s = para.sentences[si];
        out += "<s xml:id=\"" + s.id().str() + "\">";
        append_escaped(out, s.text(), false);
        out += "</s>";
        if (si + 1 < para.sentences.size()) append_escaped(out, s.space_after(), false);
      }
      out += "</p>";
      const std::string& tail = para.sentences.empty() ? std::string() : para.sentences.back().space_after();
      if (pi + 1 < div.paragraphs.size()) {
        append_escaped(out, tail, false);
      } else {
        carry = tail;
      }
    }
    out += "</d>";
    if (di + 1 < divisions.size()) append_escaped(out, carry, false);
  }
  out += "</body></text></TEI>\n";
  return out;
}

TeiReadResult parse_tei(std::string_view bytes) {
  pt::ptree tree;
  std::istringstream in{std::string(bytes)};
  try {
    pt::read_xml(in, tree, pt::xml_parser::no_concat_text | pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(e.message(), static_cast<int>(e.line()));
  }
  return TeiReader().read(tree);
}

}  // namespace onomast::corpus
