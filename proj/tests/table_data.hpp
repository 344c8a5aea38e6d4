#pragma once

// Degree / bound table for random dense pencils, rows (m, r, n, deg, theta).

namespace table {

struct Row {
  long m, r, n;
  int deg;
  long theta;
};

inline constexpr Row rows[] = {
    {3, 2, 2, 6, 9},      {3, 2, 3, 4, 16},     {3, 2, 4, 0, 15},     {3, 2, 5, 0, 6},      {3, 2, 6, 0, 0},
    {4, 2, 3, 10, 35},    {4, 2, 4, 30, 245},   {4, 2, 5, 42, 896},   {4, 2, 6, 30, 2100},  {4, 2, 7, 10, 3340},
    {4, 2, 8, 0, 3619},   {4, 2, 9, 0, 2576},   {4, 2, 12, 0, 0},     {4, 3, 3, 16, 52},    {4, 3, 4, 8, 95},
    {4, 3, 7, 0, 20},     {4, 3, 8, 0, 0},      {4, 3, 9, 0, 0},      {5, 2, 5, 0, 0},      {5, 2, 6, 35, 924},
    {5, 2, 7, 140, 10296}, {5, 3, 3, 20, 84},   {5, 3, 4, 90, 882},   {5, 4, 2, 20, 30},    {5, 4, 3, 40, 120},
    {5, 4, 4, 40, 325},   {5, 4, 5, 16, 606},   {6, 3, 3, 0, 0},      {6, 3, 4, 0, 0},      {6, 3, 5, 0, 0},
    {6, 3, 6, 112, 5005}, {6, 4, 2, 0, 0},      {6, 4, 3, 35, 165},   {6, 5, 3, 80, 230},
};

}  // namespace table
