#pragma once

#include "hopf.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "operators.hpp"
#include "poly.hpp"
#include "ppartitions.hpp"
#include "series.hpp"
#include "shapes.hpp"
#include "tableaux.hpp"
#include "words.hpp"
