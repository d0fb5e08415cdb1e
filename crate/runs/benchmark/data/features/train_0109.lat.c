HSEQd      �)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����?�)0����? O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\� O|��G\�k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(���k�;?(�����{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?��{?� U?