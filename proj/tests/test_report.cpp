#include <doctest.h>

#include <cmath>
#include <sstream>

#include "domroots/families.hpp"
#include "domroots/report.hpp"
#include "domroots/svgplot.hpp"

using namespace domroots;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.5) == "1.5");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-1.66099253224) == "-1.66099253224");
  CHECK(format_number(3.0650028254937) == "3.06500282549");
  CHECK(format_number(1e20) == "1e+20");
  CHECK(format_number(42) == "42");
  CHECK(format_number(std::nan("")) == "nan");
  for (double v : {1.0 / 3, std::sqrt(2.0), -7.25e-9, 123456.789})
    CHECK(std::abs(std::stod(format_number(v)) - v) <= 1e-11 * std::abs(v));
}

TEST_CASE("CSV round trip is byte-identical") {
  const std::string text = "# provenance line\nn,a,b\n2,-1.5,0.25\n4,3,1e-05\n";
  std::istringstream in(text);
  const CsvTable t = read_csv(in);
  CHECK(t.comments == std::vector<std::string>{"provenance line"});
  CHECK(t.header == std::vector<std::string>{"n", "a", "b"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.number(1, "b") == doctest::Approx(1e-5));
  CHECK_THROWS_AS(t.column("c"), std::out_of_range);
  CHECK(to_csv_string(t) == text);

  std::istringstream ragged("a,b\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), std::runtime_error);
  std::istringstream empty("");
  CHECK_THROWS(read_csv(empty));
  CHECK_THROWS(read_csv_file("/nonexistent/table.csv"));
}

TEST_CASE("generated tables re-emit identically") {
  for (const CsvTable& t : {friendship_real_table(2, 8), book_real_table(3, 6), modulus_table_csv(2, 6)}) {
    const std::string s = to_csv_string(t);
    std::istringstream in(s);
    CHECK(to_csv_string(read_csv(in)) == s);
  }
}

TEST_CASE("table shapes and parity conventions") {
  const CsvTable f = friendship_real_table(2, 20);
  CHECK(f.header == std::vector<std::string>{"n", "x_minus", "x_plus"});
  CHECK(f.rows.size() == 10);
  CHECK(friendship_real_table(3, 5).rows.size() == 1);
  CHECK_THROWS(friendship_real_table(1, 4));
  CHECK_THROWS(friendship_real_table(6, 4));

  const CsvTable m = modulus_table_csv(2, 10);
  CHECK(m.header == std::vector<std::string>{"n", "max_modulus", "explicit_bound", "implicit_radius"});
  CHECK(m.rows.size() == 5);

  const CsvTable b = book_real_table(3, 10);
  CHECK(b.header == std::vector<std::string>{"n", "root_1", "root_2", "zero_multiplicity", "parity"});
  CHECK(b.rows.size() == 8);
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    CHECK(b.rows[i][3] == "2");
    CHECK(b.rows[i][4] == (std::stoi(b.rows[i][0]) % 2 == 0 ? "even" : "odd"));
  }
}

TEST_CASE("reference data loads and matches computed tables") {
  const CsvTable t1 = load_reference(kTable1File);
  CHECK(t1.rows.size() == 10);
  CHECK_FALSE(t1.comments.empty());
  const CsvTable mine = friendship_real_table(2, 20);
  for (std::size_t i = 0; i < t1.rows.size(); ++i) {
    CHECK(std::abs(t1.number(i, "x_minus") - mine.number(i, "x_minus")) < 1e-6);
    CHECK(std::abs(t1.number(i, "x_plus") - mine.number(i, "x_plus")) < 1e-6);
  }
  const CsvTable t3 = load_reference(kTable3File);
  const CsvTable b = book_real_table(3, 10);
  REQUIRE(t3.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < t3.rows.size(); ++i) {
    CHECK(std::abs(t3.number(i, "root_1") - b.number(i, "root_1")) < 5e-4);
    CHECK(std::abs(t3.number(i, "root_2") - b.number(i, "root_2")) < 5e-4);
  }
  CHECK(load_reference(kTable2File).header == std::vector<std::string>{"n", "max_modulus", "explicit_bound"});
}

TEST_CASE("poly and roots CSV") {
  const CsvTable p = poly_csv(friendship_poly(1));
  CHECK(to_csv_string(p) == "k,c_k\n0,0\n1,3\n2,3\n3,1\n");
  const CsvTable r = roots_csv(all_roots(book_poly(1)));
  CHECK(r.header == std::vector<std::string>{"re", "im", "modulus", "residual"});
  REQUIRE(r.rows.size() == 4);
  CHECK(r.number(0, "re") == doctest::Approx(-2));
  CHECK(r.number(0, "im") == doctest::Approx(-std::sqrt(2.0)));
  CHECK(r.number(2, "modulus") == 0);
}

TEST_CASE("SVG output is deterministic and carries the overlays") {
  const SvgPlot fp = family_plot(FamilyId::friendship(10));
  const std::string a = render_svg(fp);
  CHECK(a == render_svg(family_plot(FamilyId::friendship(10))));
  CHECK(count(a, "class=\"root\"") == 21);
  CHECK(count(a, "class=\"bound\"") == 1);
  CHECK(a.find("data-radius=\"" + format_number(1 + std::sqrt(10 / std::log(2.0))) + "\"") != std::string::npos);
  CHECK(a.find("data-radius=\"4.79828256043\"") != std::string::npos);
  CHECK(count(a, "class=\"limit hyperbola\"") == 2);

  const std::string b = render_svg(family_plot(FamilyId::book(20)));
  CHECK(b == render_svg(family_plot(FamilyId::book(20))));
  CHECK(count(b, "class=\"root\"") == 42);
  for (const char* c : {"limit C12", "limit C13", "limit C23"}) CHECK(b.find(c) != std::string::npos);
  CHECK(count(b, "class=\"special\"") == 2);
  CHECK(b.find("class=\"bound\"") == std::string::npos);

  CHECK_THROWS(family_plot(FamilyId::corona(CoronaVariant::OddOdd, 1)));

  SvgPlot tiny;
  tiny.title = "a<b & c";
  const std::string t = render_svg(tiny);
  CHECK(t.find("a&lt;b &amp; c") != std::string::npos);
  CHECK(t.rfind("</svg>") != std::string::npos);
}
