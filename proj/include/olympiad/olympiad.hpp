#pragma once

#include "olympiad/algebra/certificate.hpp"
#include "olympiad/algebra/cyclotomic.hpp"
#include "olympiad/algebra/gaussian.hpp"
#include "olympiad/algebra/method.hpp"
#include "olympiad/algebra/poly.hpp"
#include "olympiad/board.hpp"
#include "olympiad/board_json.hpp"
#include "olympiad/construct.hpp"
#include "olympiad/interp.hpp"
#include "olympiad/search.hpp"
#include "olympiad/search_json.hpp"
#include "olympiad/walk.hpp"
