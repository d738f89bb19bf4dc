"""
Excel-export för lösningsgradslabbet

Modulen skapar en Excel-fil med:
- Gränser: Gränstabellerna (Lazard, gradsumma, D_new, D, 2D−1)
- Undersökning: En rad per m med andelar och antal brott
- Försök: En rad per slumpförsök

Tekniska detaljer:
- Använder openpyxl via pandas för att skapa och formatera filen
- Sparar filen i minnet för direkt nedladdning eller skrivning till disk
- Listor i försöksposterna slås ihop till text med "; "
- Anpassar kolumnbredder automatiskt (max 50 tecken)
"""

from io import BytesIO

import openpyxl
import pandas as pd
import streamlit as st
from openpyxl.styles import Border, Font, PatternFill, Side

from harness import table_frame
from views.custom_logging import log_action


def apply_sheet_styling(sheet, df):
    """
    Ger alla blad en enhetlig formatering.

    - Gröna rubriker med ljus text
    - Varannan rad ljusgrå
    - Kolumnbredder efter innehåll (max 50 tecken)
    """
    header_style = {
        'fill': PatternFill(start_color='00A68A', end_color='00A68A', fill_type='solid'),
        'font': Font(color='EFE9E5', bold=True, size=11),
        'border': Border(bottom=Side(style='medium', color='210061'))
    }
    row_style = {
        'even': PatternFill(start_color='EFE9E5', end_color='EFE9E5', fill_type='solid'),
        'odd': PatternFill(start_color='FFFFFF', end_color='FFFFFF', fill_type='solid'),
    }
    row_font = Font(color='210061')
    row_border = Border(bottom=Side(style='thin', color='210061'), top=Side(style='thin', color='210061'))

    for col, header in enumerate(df.columns, 1):
        cell = sheet.cell(row=1, column=col, value=header)
        cell.fill = header_style['fill']
        cell.font = header_style['font']
        cell.border = header_style['border']

    for row_idx in range(2, len(df) + 2):
        fill = row_style['even'] if row_idx % 2 == 0 else row_style['odd']
        for col_idx in range(1, len(df.columns) + 1):
            cell = sheet.cell(row=row_idx, column=col_idx)
            cell.fill = fill
            cell.font = row_font
            cell.border = row_border

    for col in range(1, len(df.columns) + 1):
        column_letter = openpyxl.utils.get_column_letter(col)
        max_length = len(str(df.columns[col - 1])) + 2
        for cell in sheet[column_letter][1:]:
            if cell.value is not None:
                max_length = max(max_length, len(str(cell.value)) + 2)
        sheet.column_dimensions[column_letter].width = min(max_length, 50)


def _flatten(value):
    if isinstance(value, (list, tuple)):
        return "; ".join(str(v) for v in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}={v}" for k, v in value.items())
    return value


def survey_frames(survey):
    """
    Gör om ett undersökningsresultat till två DataFrames.

    Returns:
        tuple: (en rad per m, en rad per försök)
    """
    cells = []
    for cell in survey["cells"]:
        row = {key: value for key, value in cell.items() if key not in ("joint", "seeds")}
        row.update({f"joint_{key}": value for key, value in cell["joint"].items()})
        cells.append(row)
    trials = [{key: _flatten(value) for key, value in entry.items()} for entry in survey["trials"]]
    return pd.DataFrame(cells), pd.DataFrame(trials)


def create_excel_file(tables_df=None, survey=None):
    """
    Skapar en Excel-fil med gränstabeller och, om givet, ett undersökningsresultat.

    Args:
        tables_df (DataFrame, optional): Gränstabellerna. Utelämnas den och
            undersökningen saknas används standardtabellerna.
        survey (dict, optional): Resultat från harness.survey_results

    Returns:
        bytes: Excel-filen
    """
    if tables_df is None and survey is None:
        tables_df = table_frame()

    sheets = []
    if tables_df is not None:
        sheets.append(('Gränser', tables_df))
    if survey is not None:
        cells_df, trials_df = survey_frames(survey)
        sheets.append(('Undersökning', cells_df))
        sheets.append(('Försök', trials_df))

    output = BytesIO()
    with pd.ExcelWriter(output, engine='openpyxl') as writer:
        for name, df in sheets:
            df.to_excel(writer, sheet_name=name, index=False)
            apply_sheet_styling(writer.sheets[name], df)

    log_action("export", f"Skapade Excel-fil med bladen {', '.join(name for name, _ in sheets)}", "export")
    output.seek(0)
    return output.getvalue()


def show(settings):
    """
    Visar nedladdningsknapp för Excel-filen.
    """
    st.header("Exportera data")
    st.write("Här kan du ladda ner gränstabellerna, och den senaste undersökningen, i en Excel-fil.")

    survey = st.session_state.get('survey_result')
    if survey is None:
        st.info("Ingen undersökning har körts i den här sessionen, filen innehåller bara gränserna.")

    excel_data = create_excel_file(table_frame(), survey)
    st.download_button(
        label="📥 Ladda ner Excel-fil",
        data=excel_data,
        file_name="losningsgrader_export.xlsx",
        mime="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
        help="Ladda ner en Excel-fil med gränser och undersökningsresultat"
    )
