#include "doctest.h"

#include <sstream>

#include "ttc/io.hpp"

using namespace ttc;

TEST_CASE("matrix files round trip across field kinds") {
    FieldPtr q = Field::rationals();
    Matrix m(q, 2, 2);
    m.set(0, 0, q->parse("1/2"));
    m.set(0, 1, q->from_int(-3));
    m.set(1, 0, q->zero());
    m.set(1, 1, q->parse("7/5"));
    std::stringstream ss;
    write_matrix(ss, m, {"a comment"});
    Matrix back = read_matrix(ss);
    CHECK(back == m);

    FieldPtr f7 = Field::prime(7);
    Matrix mp = Matrix::from_ints(f7, {{1, 2, 3}, {4, 5, 6}});
    std::stringstream s2;
    write_matrix(s2, mp);
    CHECK(read_matrix(s2) == mp);

    FieldPtr f8 = Field::extension(2, {1, 1, 0, 1});
    Matrix me(f8, 1, 2);
    me.set(0, 0, f8->parse("1,0,1"));
    me.set(0, 1, f8->parse("0,1,0"));
    std::stringstream s3;
    write_matrix(s3, me);
    Matrix eb = read_matrix(s3);
    CHECK(eb == me);
}

TEST_CASE("field headers match the documented format") {
    CHECK(field_header(*Field::rationals()) == "field Q");
    CHECK(field_header(*Field::prime(7)) == "field 7");
    CHECK(field_header(*Field::extension(2, {1, 1, 0, 1})) == "field 2 3 1 1 0 1");

    CHECK(parse_field_spec("Q")->kind() == FieldKind::Rationals);
    CHECK(parse_field_spec("11")->characteristic() == 11);
    FieldPtr e = parse_field_spec("2 3 1 1 0 1");
    CHECK(e->degree() == 3);
}

TEST_CASE("read errors") {
    std::stringstream empty("");
    CHECK_THROWS_AS(read_matrix(empty), Error);
    std::stringstream nohdr("2 2\n1 2\n3 4\n");
    CHECK_THROWS_AS(read_matrix(nohdr), Error);
    std::stringstream shortrow("field 7\n2 2\n1 2\n3\n");
    CHECK_THROWS_AS(read_matrix(shortrow), Error);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/x.mat"), Error);
    std::stringstream comp("field 9\n1 1\n1\n");
    CHECK_THROWS_AS(read_matrix(comp), CompositeModulus);
}
