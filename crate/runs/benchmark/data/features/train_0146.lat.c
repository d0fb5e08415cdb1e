HSEQd      R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?R ?0� ?FY̾��?FY̾��?FY̾��?FY̾��?FY̾��?FY̾��?FY̾��?FY̾��?FY̾��?FY̾��?FY̾��?FY̾��?
/�'Zھ
/�'Zھ
/�'Zھ
/�'Zھ
/�'Zھ
/�'Zھ
/�'Zھ
/�'Zھ
/�'Zھ
/�'ZھC��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����C��>����