#pragma once

#include <qspecial/bigint.hpp>
#include <qspecial/bigrat.hpp>
#include <qspecial/cli.hpp>
#include <qspecial/families.hpp>
#include <qspecial/framework.hpp>
#include <qspecial/hessenberg.hpp>
#include <qspecial/poly.hpp>
#include <qspecial/qarith.hpp>
#include <qspecial/series.hpp>
#include <qspecial/verify.hpp>
